//! Exact rational arithmetic and polynomial algebra.

pub mod poly;
pub mod rational;
pub mod sylvester;
pub mod univariate;

pub use poly::{exact_divide, Division, Monomial, MultiPoly};
pub use rational::{format_rational, int, rat, Rational};
pub use sylvester::{bareiss_determinant, sylvester_resultant, SylvesterMatrix};
pub use univariate::{integer_roots, integer_roots_uni, UniPoly};
