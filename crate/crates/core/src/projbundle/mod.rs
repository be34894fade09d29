//! The Chow ring of a projectivized bundle `P(E) → Y` over a cyclic base.
//!
//! `P(E)` parametrizes rank-1 quotients, so the tautological class satisfies
//!
//! ```text
//! ξ^r = Σ_{i=1}^{r} (-1)^{i+1} π*c_i · ξ^{r-i}
//! ```
//!
//! and every element is kept as a polynomial of degree `< r` in `ξ` with
//! base-class coefficients. Pushforward reads off the `ξ^{r-1}` coefficient.

pub mod quadric;

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::chow::{ChowClass, CyclicChowRing};
use crate::classes::{d_series, delta_series, segre_from_chern, BundleData};
use crate::error::{Error, Result};
use crate::exactalg::rational::{binomial, from_bigint, int, pow_int};
use crate::exactalg::Rational;

pub use quadric::{quadric_case_conclusion, quadric_intersection, QuadricBundleRing, QuadricVerdict};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjBundleRing {
    bundle: BundleData,
    total_dim: usize,
    /// Mutation hook: negates the right-hand side of the Grothendieck relation.
    flipped_relation: bool,
}

impl ProjBundleRing {
    pub fn new(bundle: BundleData) -> Arc<Self> {
        let total_dim = bundle.ring().dim + bundle.rank() - 1;
        Arc::new(ProjBundleRing {
            bundle,
            total_dim,
            flipped_relation: false,
        })
    }

    /// A deliberately wrong ring with the sign of the relation flipped.
    ///
    /// Only meant for exercising the verification checks.
    #[doc(hidden)]
    pub fn with_flipped_relation(bundle: BundleData) -> Arc<Self> {
        let mut ring = Self::new(bundle);
        Arc::make_mut(&mut ring).flipped_relation = true;
        ring
    }

    pub fn base(&self) -> &Arc<CyclicChowRing> {
        self.bundle.ring()
    }

    pub fn bundle(&self) -> &BundleData {
        &self.bundle
    }

    pub fn rank(&self) -> usize {
        self.bundle.rank()
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    /// Reduces an arbitrary polynomial in `ξ` (ascending coefficients).
    pub fn reduce(self: &Arc<Self>, mut coeffs: Vec<ChowClass>) -> ProjBundleElement {
        let r = self.rank();
        let base = self.base();
        let sign = if self.flipped_relation { -Rational::one() } else { Rational::one() };
        // top-down: a·ξ^k = a·ξ^{k-r}·Σ (-1)^{i+1} c_i ξ^{r-i}
        for k in (r..coeffs.len()).rev() {
            let a = std::mem::replace(&mut coeffs[k], ChowClass::zero(base));
            if a.is_zero() {
                continue;
            }
            for i in 1..=r {
                let s = if i % 2 == 1 { sign.clone() } else { -sign.clone() };
                let term = a.mul(&self.bundle.chern(i)).expect("same ring").scale(&s);
                let slot = k - i;
                coeffs[slot] = coeffs[slot].add(&term).expect("same ring");
            }
        }
        coeffs.resize(r, ChowClass::zero(base));
        ProjBundleElement {
            ring: Arc::clone(self),
            coeffs,
        }
    }

    pub fn zero(self: &Arc<Self>) -> ProjBundleElement {
        self.reduce(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> ProjBundleElement {
        self.pullback(&ChowClass::one(self.base()))
    }

    /// `π*x`.
    pub fn pullback(self: &Arc<Self>, x: &ChowClass) -> ProjBundleElement {
        self.reduce(vec![x.clone()])
    }

    /// `ξ^k`, reduced.
    pub fn xi_power(self: &Arc<Self>, k: usize) -> ProjBundleElement {
        let mut coeffs = vec![ChowClass::zero(self.base()); k + 1];
        coeffs[k] = ChowClass::one(self.base());
        self.reduce(coeffs)
    }

    /// `-K_π = r·ξ - π*c_1`.
    pub fn anticanonical(self: &Arc<Self>) -> ProjBundleElement {
        let r = int(self.rank() as i64);
        self.xi_power(1)
            .scale(&r)
            .sub(&self.pullback(&self.bundle.chern(1)))
    }

    /// `π*H^k`.
    pub fn h_power(self: &Arc<Self>, k: usize) -> ProjBundleElement {
        self.pullback(&ChowClass::h_power(self.base(), k, Rational::one()))
    }

    /// `-K_π + τ·π*H`.
    pub fn twisted_anticanonical(self: &Arc<Self>, tau: &Rational) -> ProjBundleElement {
        self.anticanonical().add(&self.h_power(1).scale(tau))
    }

    /// `Σ_{i=0}^{r} (-1)^i (-K_π)^{r-i} π*Δ_i`; zero on a correct ring.
    pub fn anticanonical_relation(self: &Arc<Self>) -> ProjBundleElement {
        let r = self.rank();
        let delta = delta_series(&self.bundle, r);
        let minus_k = self.anticanonical();
        (0..=r).fold(self.zero(), |acc, i| {
            let term = minus_k.pow(r - i).mul(&self.pullback(&delta.get(i)));
            if i % 2 == 0 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        })
    }
}

/// Element of `A*(P(E))`, always reduced to `ξ`-degree below the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjBundleElement {
    ring: Arc<ProjBundleRing>,
    coeffs: Vec<ChowClass>,
}

impl ProjBundleElement {
    pub fn ring(&self) -> &Arc<ProjBundleRing> {
        &self.ring
    }

    /// Coefficient of `ξ^j`.
    pub fn coeffs(&self) -> &[ChowClass] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(ChowClass::is_zero)
    }

    pub fn add(&self, other: &ProjBundleElement) -> ProjBundleElement {
        ProjBundleElement {
            ring: Arc::clone(&self.ring),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b).expect("same base"))
                .collect(),
        }
    }

    pub fn sub(&self, other: &ProjBundleElement) -> ProjBundleElement {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ProjBundleElement {
        ProjBundleElement {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &ProjBundleElement) -> ProjBundleElement {
        let base = self.ring.base();
        let mut raw = vec![ChowClass::zero(base); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                raw[i + j] = raw[i + j].add(&a.mul(b).expect("same base")).expect("same base");
            }
        }
        self.ring.reduce(raw)
    }

    pub fn pow(&self, e: usize) -> ProjBundleElement {
        (0..e).fold(self.ring.one(), |acc, _| acc.mul(self))
    }

    /// `π_*`: the coefficient of `ξ^{r-1}`.
    pub fn pushforward(&self) -> ChowClass {
        self.coeffs[self.ring.rank() - 1].clone()
    }

    /// Intersection number against the fundamental class of `P(E)`.
    pub fn degree(&self) -> Rational {
        self.pushforward().degree()
    }
}

/// Pushforward of an unreduced polynomial in `ξ` through Segre classes:
/// `π_*(a·ξ^j) = a·s_{j-r+1}`.
pub fn pushforward_via_segre(bundle: &BundleData, coeffs: &[ChowClass]) -> ChowClass {
    let r = bundle.rank();
    let s = segre_from_chern(bundle, bundle.ring().dim);
    coeffs
        .iter()
        .enumerate()
        .filter(|(j, _)| *j + 1 >= r)
        .fold(ChowClass::zero(bundle.ring()), |acc, (j, a)| {
            acc.add(&a.mul(&s.get(j + 1 - r)).expect("same base"))
                .expect("same base")
        })
}

/// `(-K_π + τ π*H)^i · π*H^{n-i}` by expanding in the ring of `P(E)`.
pub fn anticanonical_power_by_expansion(ring: &Arc<ProjBundleRing>, tau: &Rational, i: usize) -> Result<Rational> {
    let n = ring.total_dim();
    if i > n {
        return Err(Error::DimensionMismatch(format!(
            "power {i} exceeds dim P(E) = {n}"
        )));
    }
    let d = ring.twisted_anticanonical(tau);
    Ok(d.pow(i).mul(&ring.h_power(n - i)).degree())
}

/// The same number from the `d` classes:
/// `r^{r-1} Σ_k C(i, i-k) d_{k+1-r} · τ^{i-k} H^{i-k} · H^{n-i}`.
pub fn anticanonical_power_by_d_classes(bundle: &BundleData, tau: &Rational, i: usize) -> Result<Rational> {
    let r = bundle.rank();
    let base = bundle.ring();
    let n = base.dim + r - 1;
    if i > n {
        return Err(Error::DimensionMismatch(format!(
            "power {i} exceeds dim P(E) = {n}"
        )));
    }
    let d = d_series(bundle, base.dim);
    let mut acc = ChowClass::zero(base);
    for k in (r - 1)..=i {
        let idx = k + 1 - r;
        if idx > base.dim {
            break;
        }
        let c = from_bigint(binomial(i as i64, (i - k) as i64)) * tau.pow((i - k) as i32);
        if c.is_zero() {
            continue;
        }
        acc = acc.add(&d.get(idx).times_h_power(n - k).scale(&c))?;
    }
    Ok(acc.degree() * from_bigint(pow_int(r as i64, (r - 1) as u32)))
}

/// `(-K_π + τ π*H)^i · π*H^{n-i}`, computed along both routes.
///
/// Disagreement between the routes is reported as [`Error::Inconsistent`].
pub fn anticanonical_power_degree(ring: &Arc<ProjBundleRing>, tau: &Rational, i: usize) -> Result<Rational> {
    let expanded = anticanonical_power_by_expansion(ring, tau, i)?;
    let formula = anticanonical_power_by_d_classes(ring.bundle(), tau, i)?;
    if expanded != formula {
        return Err(Error::Inconsistent(format!(
            "(-K+{tau}H)^{i}: ring expansion gives {expanded}, d-class formula gives {formula}"
        )));
    }
    Ok(expanded)
}

/// `[(-K_π + τH)^i · H^{n-i} : i = 0..=n]`.
pub fn intersection_profile(ring: &Arc<ProjBundleRing>, tau: &Rational) -> Result<Vec<Rational>> {
    (0..=ring.total_dim())
        .map(|i| anticanonical_power_degree(ring, tau, i))
        .collect()
}
