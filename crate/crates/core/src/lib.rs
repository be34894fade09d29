//! Exact intersection theory on projectivized vector bundles over bases
//! with cyclic Chow groups.
//!
//! The crate is organized bottom-up:
//!
//! - [`exactalg`]: rationals, multivariate polynomials, Sylvester resultants.
//! - [`chow`]: Chow rings of Picard-rank-one bases and Betti arithmetic.
//! - [`classes`]: Segre, Chern, `d` and `Δ` class series of a bundle.
//! - [`projbundle`]: the Chow ring of `P(E)` and relative quadrics in it.
//! - [`slopes`]: slope polynomial systems and their resultant analysis.
//! - [`classify`]: the rank-3 candidate enumeration on five-dimensional bases.
//! - [`verify`]: the named reproduction checks behind `verify-paper`.

pub mod chow;
pub mod classes;
pub mod classify;
mod error;
pub mod exactalg;
pub mod par;
pub mod projbundle;
pub mod slopes;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{MultiPoly, Rational};
pub use par::Execution;
