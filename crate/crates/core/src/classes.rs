//! Segre, Chern, `d` and `Δ` class series of a vector bundle on a cyclic base.
//!
//! Sign conventions follow the rank-1-quotient projectivization: with `ξ` the
//! tautological class on `P(E)`, `s_i(E) = π_*(ξ^{r-1+i})` and
//! `Σ c_i t^i = (Σ (-1)^i s_i t^i)^{-1}`, so that `s_1 = c_1` and
//! `s_2 = c_1^2 - c_2`.
//!
//! The `d` classes are the pushforwards of powers of the relative
//! anticanonical class normalized by `r^{r-1}`:
//!
//! ```text
//! d_i = Σ_{j=0}^{i} C(r-1+i, r-1+j) r^j s_j (-s_1)^{i-j}
//! Δ_t = d_{-t}^{-1}
//! ```

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chow::{ChowClass, CyclicChowRing};
use crate::error::{Error, Result};
use crate::exactalg::rational::{binomial, from_bigint, int, pow_int};
use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleData {
    ring: Arc<CyclicChowRing>,
    rank: usize,
    /// `c_1 .. c_r`, each pure of its codimension.
    chern: Vec<ChowClass>,
}

impl BundleData {
    /// Bundle from Chern classes given as multiples of the lattice generators.
    ///
    /// Zero entries are accepted in any codimension; nonzero entries need a
    /// defined generator (see [`CyclicChowRing::generator_scale`]).
    pub fn from_generator_units(ring: &Arc<CyclicChowRing>, rank: usize, units: &[i64]) -> Result<Self> {
        if units.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} needs {rank} Chern classes, got {}",
                units.len()
            )));
        }
        let chern = units
            .iter()
            .enumerate()
            .map(|(i, &k)| {
                if k == 0 || i + 1 > ring.dim {
                    Ok(ChowClass::zero(ring))
                } else {
                    ChowClass::from_generator(ring, i + 1, int(k))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, rank, chern)
    }

    /// Bundle from Chern classes given as rational multiples of `H^i`.
    pub fn from_h_multiples(ring: &Arc<CyclicChowRing>, rank: usize, coeffs: &[Rational]) -> Result<Self> {
        if coeffs.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} needs {rank} Chern classes, got {}",
                coeffs.len()
            )));
        }
        let chern = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| ChowClass::h_power(ring, i + 1, c.clone()))
            .collect();
        Self::new(ring, rank, chern)
    }

    pub fn new(ring: &Arc<CyclicChowRing>, rank: usize, chern: Vec<ChowClass>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Domain("rank must be positive".into()));
        }
        if chern.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "rank {rank} needs {rank} Chern classes, got {}",
                chern.len()
            )));
        }
        for (i, c) in chern.iter().enumerate() {
            if c.ring().as_ref() != ring.as_ref() {
                return Err(Error::RingMismatch(ring.name.clone(), c.ring().name.clone()));
            }
            if !c.is_zero() && c.pure_codim() != Some(i + 1) {
                return Err(Error::NotPure(i + 1));
            }
        }
        Ok(BundleData {
            ring: Arc::clone(ring),
            rank,
            chern,
        })
    }

    /// The trivial bundle of the given rank.
    pub fn trivial(ring: &Arc<CyclicChowRing>, rank: usize) -> Self {
        Self::new(ring, rank, vec![ChowClass::zero(ring); rank]).expect("valid")
    }

    pub fn ring(&self) -> &Arc<CyclicChowRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `c_i`, with `c_0 = 1` and `c_i = 0` above the rank.
    pub fn chern(&self, i: usize) -> ChowClass {
        match i {
            0 => ChowClass::one(&self.ring),
            i if i <= self.rank => self.chern[i - 1].clone(),
            _ => ChowClass::zero(&self.ring),
        }
    }

    /// `c_i` in generator units, where the generator is defined.
    pub fn chern_units(&self, i: usize) -> Result<Rational> {
        self.chern(i).in_generator_units(i)
    }

    /// Total Chern series `c_0, ..., c_N`.
    pub fn chern_series(&self) -> ClassSeries {
        ClassSeries {
            ring: Arc::clone(&self.ring),
            terms: (0..=self.ring.dim).map(|i| self.chern(i)).collect(),
        }
    }
}

/// Truncated series of classes, `terms[i]` pure of codimension `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSeries {
    ring: Arc<CyclicChowRing>,
    terms: Vec<ChowClass>,
}

impl ClassSeries {
    pub fn from_terms(ring: &Arc<CyclicChowRing>, terms: Vec<ChowClass>) -> Self {
        ClassSeries {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<CyclicChowRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[ChowClass] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term `i`, zero beyond the stored length.
    pub fn get(&self, i: usize) -> ChowClass {
        self.terms
            .get(i)
            .cloned()
            .unwrap_or_else(|| ChowClass::zero(&self.ring))
    }

    /// H-coefficient of term `i` (the class is `coeff·H^i`).
    pub fn h_coeff(&self, i: usize) -> Rational {
        self.get(i).coeff(i)
    }

    /// Multiplicative inverse as a power series, to the same length.
    ///
    /// Requires `terms[0] = 1`.
    pub fn inverse(&self) -> ClassSeries {
        let mut out: Vec<ChowClass> = Vec::with_capacity(self.terms.len());
        for i in 0..self.terms.len() {
            if i == 0 {
                out.push(ChowClass::one(&self.ring));
                continue;
            }
            let mut acc = ChowClass::zero(&self.ring);
            for j in 1..=i {
                let prod = self.terms[j].mul(&out[i - j]).expect("same ring");
                acc = acc.sub(&prod).expect("same ring");
            }
            out.push(acc);
        }
        ClassSeries::from_terms(&self.ring, out)
    }

    /// Substitutes `t -> -t`.
    pub fn alternate(&self) -> ClassSeries {
        ClassSeries::from_terms(
            &self.ring,
            self.terms
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.scale(&-Rational::one()) } else { c.clone() })
                .collect(),
        )
    }

    /// Truncated product of two series.
    pub fn mul(&self, other: &ClassSeries) -> ClassSeries {
        let len = self.terms.len().min(other.terms.len());
        let terms = (0..len)
            .map(|i| {
                (0..=i).fold(ChowClass::zero(&self.ring), |acc, j| {
                    acc.add(&self.terms[j].mul(&other.terms[i - j]).expect("same ring"))
                        .expect("same ring")
                })
            })
            .collect();
        ClassSeries::from_terms(&self.ring, terms)
    }

    fn truncated(mut self, max_index: usize) -> ClassSeries {
        let ring = Arc::clone(&self.ring);
        self.terms.resize(max_index + 1, ChowClass::zero(&ring));
        self
    }
}

/// Segre classes `s_0..s_max`.
pub fn segre_from_chern(b: &BundleData, max_index: usize) -> ClassSeries {
    let len = b.ring.dim.max(max_index) + 1;
    let c = ClassSeries::from_terms(&b.ring, (0..len).map(|i| b.chern(i)).collect());
    // Σ s_i t^i = c(-t)^{-1}
    c.alternate().inverse().truncated(max_index)
}

/// Chern classes `c_0..c_max` recovered from Segre classes.
pub fn chern_from_segre(s: &ClassSeries, max_index: usize) -> ClassSeries {
    s.alternate().inverse().truncated(max_index)
}

/// The classes `d_0..d_max`.
pub fn d_series(b: &BundleData, max_index: usize) -> ClassSeries {
    let r = b.rank as i64;
    let s = segre_from_chern(b, max_index.max(1));
    let minus_s1 = s.get(1).scale(&-Rational::one());
    let terms = (0..=max_index)
        .map(|i| {
            (0..=i).fold(ChowClass::zero(&b.ring), |acc, j| {
                let coeff = from_bigint(binomial(r - 1 + i as i64, r - 1 + j as i64) * pow_int(r, j as u32));
                if coeff.is_zero() {
                    return acc;
                }
                let term = s.get(j).mul(&minus_s1.pow(i - j)).expect("same ring").scale(&coeff);
                acc.add(&term).expect("same ring")
            })
        })
        .collect();
    ClassSeries::from_terms(&b.ring, terms)
}

/// The classes `Δ_0..Δ_max`, by inverting `d_{-t}`.
pub fn delta_series(b: &BundleData, max_index: usize) -> ClassSeries {
    d_series(b, max_index).alternate().inverse()
}

/// `Σ_{k=0}^{i} (-1)^{i-k} C(r-k, i-k) r^k c_k c_1^{i-k}`, zero for `i > r`.
pub fn delta_closed_form(b: &BundleData, i: usize) -> ChowClass {
    let r = b.rank;
    if i > r {
        return ChowClass::zero(&b.ring);
    }
    let c1 = b.chern(1);
    (0..=i).fold(ChowClass::zero(&b.ring), |acc, k| {
        let sign = if (i - k).is_multiple_of(2) { 1 } else { -1 };
        let coeff = from_bigint(
            binomial((r - k) as i64, (i - k) as i64) * pow_int(r as i64, k as u32) * sign,
        );
        let term = b.chern(k).mul(&c1.pow(i - k)).expect("same ring").scale(&coeff);
        acc.add(&term).expect("same ring")
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub pass: bool,
    /// `d_4 - d_2^2` as an `H^4` multiple.
    pub d4_residual: String,
    /// `d_5 - 2 d_2 d_3` as an `H^5` multiple.
    pub d5_residual: String,
}

/// Checks `d_4 = d_2^2` and `d_5 = 2 d_2 d_3` for a rank-3 bundle.
pub fn verify_low_rank_reductions(b: &BundleData) -> Result<ReductionReport> {
    if b.rank != 3 {
        return Err(Error::UnsupportedRank(b.rank, 3));
    }
    let d = d_series(b, 5);
    let d4 = d.get(4).sub(&d.get(2).pow(2))?;
    let d5 = d
        .get(5)
        .sub(&d.get(2).mul(&d.get(3))?.scale(&int(2)))?;
    Ok(ReductionReport {
        pass: d4.is_zero() && d5.is_zero(),
        d4_residual: d4.to_string(),
        d5_residual: d5.to_string(),
    })
}

/// `Δ_i` written out through the compositions of `i` (oracle form).
pub fn delta_by_compositions(d: &ClassSeries, i: usize) -> ChowClass {
    fn go(d: &ClassSeries, remaining: usize, parts: usize, acc: ChowClass, total: usize, out: &mut ChowClass) {
        if remaining == 0 {
            let sign = if (total - parts).is_multiple_of(2) { Rational::one() } else { -Rational::one() };
            *out = out.add(&acc.scale(&sign)).expect("same ring");
            return;
        }
        for j in 1..=remaining {
            let next = acc.mul(&d.get(j)).expect("same ring");
            if next.is_zero() {
                continue;
            }
            go(d, remaining - j, parts + 1, next, total, out);
        }
    }
    let ring = d.ring();
    let mut out = ChowClass::zero(ring);
    if i == 0 {
        return ChowClass::one(ring);
    }
    go(d, i, 0, ChowClass::one(ring), i, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn ring(name: &str) -> Arc<CyclicChowRing> {
        Arc::new(CyclicChowRing::by_name(name).unwrap())
    }

    fn ottaviani() -> BundleData {
        BundleData::from_generator_units(&ring("Q5"), 3, &[2, 2, 2]).unwrap()
    }

    #[test]
    fn line_bundle_segre_is_geometric() {
        let r = ring("P5");
        let b = BundleData::from_generator_units(&r, 1, &[3]).unwrap();
        let s = segre_from_chern(&b, 5);
        for i in 0..=5 {
            assert_eq!(s.get(i), ChowClass::h_power(&r, i, int(3).pow(i as i32)));
        }
    }

    #[test]
    fn ottaviani_segre() {
        let b = ottaviani();
        let s = segre_from_chern(&b, 3);
        assert_eq!(s.h_coeff(1), int(2));
        assert_eq!(s.h_coeff(2), int(2));
        // s_3 = 2P = H^3 on Q5
        assert_eq!(s.get(3).in_generator_units(3).unwrap(), int(2));
        assert_eq!(s.h_coeff(3), int(1));
    }

    #[test]
    fn trivial_bundle_series() {
        let b = BundleData::trivial(&ring("KG2"), 4);
        let s = segre_from_chern(&b, 5);
        let delta = delta_series(&b, 5);
        assert_eq!(s.get(0), ChowClass::one(b.ring()));
        for i in 1..=5 {
            assert!(s.get(i).is_zero());
            assert!(delta.get(i).is_zero());
        }
    }

    #[test]
    fn ottaviani_d_classes() {
        let d = d_series(&ottaviani(), 5);
        assert_eq!(d.get(0), ChowClass::one(d.ring()));
        assert!(d.get(1).is_zero());
        assert_eq!(d.h_coeff(2), int(-6));
        assert_eq!(d.h_coeff(3), int(7));
        assert_eq!(d.get(3).in_generator_units(3).unwrap(), int(14));
        assert_eq!(d.h_coeff(4), int(36));
    }

    #[test]
    fn rank_two_discriminant() {
        let r = ring("P5");
        let b = BundleData::from_generator_units(&r, 2, &[0, 5]).unwrap();
        assert_eq!(d_series(&b, 2).h_coeff(2), int(-20));
    }

    #[test]
    fn delta_low_terms() {
        let b = BundleData::from_generator_units(&ring("KG2"), 4, &[1, -2, 3, 0]).unwrap();
        let d = d_series(&b, 5);
        let delta = delta_series(&b, 5);
        let one = -Rational::one();
        assert_eq!(delta.get(0), ChowClass::one(b.ring()));
        assert!(delta.get(1).is_zero());
        assert_eq!(delta.get(2), d.get(2).scale(&one));
        assert_eq!(delta.get(3), d.get(3));
        assert_eq!(
            delta.get(4),
            d.get(2).pow(2).sub(&d.get(4)).unwrap()
        );
        assert_eq!(
            delta.get(5),
            d.get(5).sub(&d.get(2).mul(&d.get(3)).unwrap().scale(&int(2))).unwrap()
        );
        for i in 0..=5 {
            assert_eq!(delta.get(i), delta_by_compositions(&d, i));
        }
    }

    #[test]
    fn closed_form_examples() {
        let b = ottaviani();
        assert_eq!(delta_closed_form(&b, 0), ChowClass::one(b.ring()));
        assert!(delta_closed_form(&b, 4).is_zero());
        assert_eq!(delta_closed_form(&b, 2).coeff(2), int(6));
        let delta = delta_series(&b, 5);
        for i in 0..=5 {
            assert_eq!(delta.get(i), delta_closed_form(&b, i));
        }
    }

    #[test]
    fn reductions() {
        let report = verify_low_rank_reductions(&ottaviani()).unwrap();
        assert!(report.pass);
        let d = d_series(&ottaviani(), 4);
        assert_eq!(d.h_coeff(4), int(36));
        assert!(verify_low_rank_reductions(&BundleData::trivial(&ring("P5"), 3)).unwrap().pass);
        assert!(matches!(
            verify_low_rank_reductions(&BundleData::trivial(&ring("P5"), 2)),
            Err(Error::UnsupportedRank(2, 3))
        ));
    }

    #[test]
    fn bundle_validation() {
        let r = ring("Q5");
        assert!(BundleData::from_generator_units(&r, 3, &[1, 2]).is_err());
        // codim 4 generator is undefined on 5-folds
        assert!(BundleData::from_generator_units(&r, 4, &[1, 1, 1, 1]).is_err());
        assert!(BundleData::from_generator_units(&r, 4, &[2, 2, 2, 0]).is_ok());
        let b = BundleData::from_h_multiples(&r, 2, &[rat(1, 2), int(3)]).unwrap();
        assert_eq!(b.chern(2).coeff(2), int(3));
    }
}
