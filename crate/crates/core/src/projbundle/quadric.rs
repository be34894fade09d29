//! Relative quadrics `X ∈ |2ξ|` inside `P(E)` for a rank-5 bundle on a
//! four-dimensional base with `c_1 = c_3 = c_5 = 0`.
//!
//! Base classes are polynomials in `h`, `c2`, `c4` (weights 1, 2, 4),
//! truncated above weight 4. Degrees of weight-4 monomials become the
//! symbols `c2h2`, `c2sq`, `c4`; `h^4` becomes the base degree.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::chow::CyclicChowRing;
use crate::error::{Error, Result};
use crate::exactalg::rational::int;
use crate::exactalg::{integer_roots_uni, MultiPoly, Rational, UniPoly};

const RANK: usize = 5;
const TAU: &str = "tau";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuadricChern {
    /// `c2`, `c4` kept as free classes.
    Symbolic,
    /// `c2 = c2·H^2`, `c4 = c4·H^4`.
    Numeric { c2: Rational, c4: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricBundleRing {
    base: Arc<CyclicChowRing>,
    chern: QuadricChern,
}

impl QuadricBundleRing {
    pub fn new(base: Arc<CyclicChowRing>, chern: QuadricChern) -> Result<Self> {
        if base.dim != 4 {
            return Err(Error::DimensionMismatch(format!(
                "relative quadric needs a 4-dimensional base, got {}",
                base.dim
            )));
        }
        Ok(QuadricBundleRing { base, chern })
    }

    pub fn symbolic(base: Arc<CyclicChowRing>) -> Result<Self> {
        Self::new(base, QuadricChern::Symbolic)
    }

    pub fn base(&self) -> &Arc<CyclicChowRing> {
        &self.base
    }

    pub fn chern(&self) -> &QuadricChern {
        &self.chern
    }

    /// Total dimension of the quadric fibration.
    pub fn dim(&self) -> usize {
        self.base.dim + RANK - 2
    }

    fn c2(&self) -> MultiPoly {
        match &self.chern {
            QuadricChern::Symbolic => MultiPoly::var("c2"),
            QuadricChern::Numeric { c2, .. } => MultiPoly::var("h").pow(2).scale(c2),
        }
    }

    fn c4(&self) -> MultiPoly {
        match &self.chern {
            QuadricChern::Symbolic => MultiPoly::var("c4"),
            QuadricChern::Numeric { c4, .. } => MultiPoly::var("h").pow(4).scale(c4),
        }
    }

    /// `ξ^5 = -c2 ξ^3 - c4 ξ`, applied top-down.
    fn reduce(&self, mut coeffs: Vec<MultiPoly>) -> Vec<MultiPoly> {
        let (c2, c4) = (self.c2(), self.c4());
        for k in (RANK..coeffs.len()).rev() {
            let a = std::mem::replace(&mut coeffs[k], MultiPoly::zero());
            if a.is_zero() {
                continue;
            }
            coeffs[k - 2] = truncate(&(&coeffs[k - 2] - &(&a * &c2)));
            coeffs[k - 4] = truncate(&(&coeffs[k - 4] - &(&a * &c4)));
        }
        coeffs.resize(RANK, MultiPoly::zero());
        coeffs
    }

    fn mul(&self, x: &[MultiPoly], y: &[MultiPoly]) -> Vec<MultiPoly> {
        let mut raw = vec![MultiPoly::zero(); x.len() + y.len()];
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                if !a.is_zero() && !b.is_zero() {
                    raw[i + j] = truncate(&(&raw[i + j] + &(a * b)));
                }
            }
        }
        self.reduce(raw)
    }

    /// Base degree of a class: `h^4 ↦ deg`, other weight-4 monomials ↦ symbols.
    fn degree(&self, p: &MultiPoly) -> MultiPoly {
        let vars = p.vars();
        let mut acc = MultiPoly::zero();
        for (mono, c) in p.terms() {
            if weight(vars, &mono.0) != 4 {
                continue;
            }
            let e = |name: &str| exponent(vars, &mono.0, name);
            let symbol = match (e("h"), e("c2"), e("c4")) {
                (4, 0, 0) => MultiPoly::from(self.base.d),
                (2, 1, 0) => MultiPoly::var("c2h2"),
                (0, 2, 0) => MultiPoly::var("c2sq"),
                (0, 0, 1) => MultiPoly::var("c4"),
                _ => unreachable!("weight-4 monomial"),
            };
            let tau_part = MultiPoly::var(TAU).pow(e(TAU));
            acc = &acc + &(&(&symbol * &tau_part) * &MultiPoly::constant(c.clone()));
        }
        acc
    }
}

fn exponent(vars: &[String], exps: &[u32], name: &str) -> u32 {
    vars.iter().position(|v| v == name).map_or(0, |i| exps[i])
}

fn weight(vars: &[String], exps: &[u32]) -> u32 {
    exponent(vars, exps, "h") + 2 * exponent(vars, exps, "c2") + 4 * exponent(vars, exps, "c4")
}

fn truncate(p: &MultiPoly) -> MultiPoly {
    let vars = p.vars().to_vec();
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    MultiPoly::from_terms(
        &names,
        p.terms()
            .filter(|(m, _)| weight(&vars, &m.0) <= 4)
            .map(|(m, c)| (m.0.clone(), c.clone())),
    )
}

/// `(3ξ + τh)^i · h^j · [X]` with `[X] = 2ξ` and `i + j = 7`.
///
/// `tau` may be the variable `tau` or a constant.
pub fn quadric_intersection(q: &QuadricBundleRing, tau: &MultiPoly, i: usize, h_power: usize) -> Result<MultiPoly> {
    if i + h_power != q.dim() {
        return Err(Error::DimensionMismatch(format!(
            "powers {i} + {h_power} must sum to {}",
            q.dim()
        )));
    }
    let h = MultiPoly::var("h");
    let mut d = vec![MultiPoly::zero(); RANK];
    d[0] = &h * tau;
    d[1] = MultiPoly::from(3);
    let mut acc = vec![MultiPoly::zero(); RANK];
    acc[0] = truncate(&h.pow(h_power as u32));
    for _ in 0..i {
        acc = q.mul(&acc, &d);
    }
    let mut x = vec![MultiPoly::zero(); RANK];
    x[1] = MultiPoly::from(2);
    acc = q.mul(&acc, &x);
    Ok(q.degree(&acc[RANK - 1]))
}

/// Outcome of the slope analysis on a relative quadric.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricVerdict {
    /// `(3ξ+τh)^5 · h^2 · [X]`.
    pub eq5: MultiPoly,
    /// `(3ξ+τh)^6 · h · [X]`.
    pub eq6: MultiPoly,
    /// The univariate condition on `τ` left after elimination.
    pub eliminated: MultiPoly,
    /// The unique `(τ, c2·H^2)` solution, when there is one.
    pub solution: Option<(Rational, Rational)>,
    /// `(-K)^4 · H^3` at the solution.
    pub anticanonical_top: Option<Rational>,
    /// `(-K+τH)^i · H^{7-i}` vanishes for `i = 4, 5, 6` at the solution.
    pub profile_vanishes: bool,
    /// No admissible slope survives, so the case is ruled out.
    pub excluded: bool,
}

/// Solves the two slope conditions and tests the surviving solution.
pub fn quadric_case_conclusion(q: &QuadricBundleRing) -> Result<QuadricVerdict> {
    let tau = MultiPoly::var(TAU);
    let eq5 = quadric_intersection(q, &tau, 5, 2)?;
    let eq6 = quadric_intersection(q, &tau, 6, 1)?;
    let (eliminated, solution) = match q.chern {
        QuadricChern::Symbolic => solve_symbolic(&eq5, &eq6)?,
        QuadricChern::Numeric { ref c2, .. } => solve_numeric(&eq5, &eq6, c2)?,
    };
    let (anticanonical_top, profile_vanishes) = match &solution {
        None => (None, false),
        Some((t, c)) => {
            let at = |p: &MultiPoly| -> Result<Rational> {
                let v = p.eval(TAU, t).eval("c2h2", c);
                v.constant_value().ok_or_else(|| {
                    Error::Inconsistent(format!("intersection not determined by (tau, c2h2): {v}"))
                })
            };
            let top = at(&quadric_intersection(q, &MultiPoly::from(0), 4, 3)?)?;
            let tc = MultiPoly::constant(t.clone());
            let mut vanish = true;
            for i in 4..=6 {
                vanish &= at(&quadric_intersection(q, &tc, i, 7 - i)?)?.is_zero();
            }
            (Some(top), vanish)
        }
    };
    let excluded = solution.is_none() || profile_vanishes;
    Ok(QuadricVerdict {
        eq5,
        eq6,
        eliminated,
        solution,
        anticanonical_top,
        profile_vanishes,
        excluded,
    })
}

/// `eq5` is linear in `c2h2`; substitute into `eq6`. Only a monomial in `τ`
/// has `τ = 0` as its single complex root.
fn solve_symbolic(eq5: &MultiPoly, eq6: &MultiPoly) -> Result<(MultiPoly, Option<(Rational, Rational)>)> {
    if eq5.degree_in("c2h2") != Some(1) {
        return Err(Error::Inconsistent(format!("expected a condition linear in c2h2, got {eq5}")));
    }
    let lin = eq5.coeff_in("c2h2", 1);
    let lin = lin
        .constant_value()
        .ok_or_else(|| Error::Inconsistent(format!("non-constant c2h2 coefficient {lin}")))?;
    let rest = eq5.coeff_in("c2h2", 0);
    let c_of_tau = rest.scale(&(-Rational::one() / lin));
    let eliminated = eq6.substitute("c2h2", &c_of_tau);
    if eliminated.is_zero() {
        return Ok((eliminated, None));
    }
    let uni = UniPoly::from_multi(&eliminated, TAU)?;
    let solution = if uni.coeffs().iter().filter(|c| !c.is_zero()).count() == 1 && uni.degree() > Some(0) {
        let c = c_of_tau.eval(TAU, &int(0));
        c.constant_value().map(|c| (int(0), c))
    } else {
        None
    };
    Ok((eliminated, solution))
}

/// With `c2` fixed both conditions are univariate; common roots divide the gcd.
fn solve_numeric(eq5: &MultiPoly, eq6: &MultiPoly, c2: &Rational) -> Result<(MultiPoly, Option<(Rational, Rational)>)> {
    let g = UniPoly::from_multi(eq5, TAU)?.gcd(&UniPoly::from_multi(eq6, TAU)?);
    let eliminated = g.to_multi(TAU);
    if g.degree() == Some(0) {
        return Ok((eliminated, None));
    }
    let roots = integer_roots_uni(&g)?;
    let c2h2 = c2.clone();
    Ok((eliminated, roots.first().map(|t| (Rational::from(t.clone()), c2h2))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> QuadricBundleRing {
        QuadricBundleRing::symbolic(Arc::new(CyclicChowRing::p4())).unwrap()
    }

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    #[test]
    fn slope_conditions_expand() {
        let q = sym();
        let t = v(TAU);
        let e5 = quadric_intersection(&q, &t, 5, 2).unwrap();
        let e6 = quadric_intersection(&q, &t, 6, 1).unwrap();
        let expect5 = (MultiPoly::from(10) * t.pow(2) - MultiPoly::from(9) * v("c2h2")).scale(&int(54));
        let expect6 = (&t * &(MultiPoly::from(10) * t.pow(2) - MultiPoly::from(27) * v("c2h2"))).scale(&int(108));
        assert_eq!(e5, expect5);
        assert_eq!(e6, expect6);
    }

    #[test]
    fn trivial_chern_at_zero_slope() {
        let q = QuadricBundleRing::new(
            Arc::new(CyclicChowRing::p4()),
            QuadricChern::Numeric { c2: int(0), c4: int(0) },
        )
        .unwrap();
        assert!(quadric_intersection(&q, &MultiPoly::from(0), 6, 1).unwrap().is_zero());
        let v = quadric_case_conclusion(&q).unwrap();
        assert_eq!(v.solution, Some((int(0), int(0))));
        assert!(v.excluded);
    }

    #[test]
    fn symbolic_case_forces_zero() {
        let v = quadric_case_conclusion(&sym()).unwrap();
        assert_eq!(v.solution, Some((int(0), int(0))));
        assert_eq!(v.anticanonical_top, Some(int(0)));
        assert!(v.profile_vanishes);
        assert!(v.excluded);
    }

    #[test]
    fn nonzero_c2_has_no_common_slope() {
        let q = QuadricBundleRing::new(
            Arc::new(CyclicChowRing::p4()),
            QuadricChern::Numeric { c2: int(1), c4: int(0) },
        )
        .unwrap();
        let v = quadric_case_conclusion(&q).unwrap();
        assert!(v.solution.is_none());
        assert!(v.excluded);
    }

    #[test]
    fn wrong_dimensions_rejected() {
        assert!(quadric_intersection(&sym(), &v(TAU), 5, 1).is_err());
        assert!(QuadricBundleRing::symbolic(Arc::new(CyclicChowRing::p5())).is_err());
    }
}
