//! Rational Chow rings of Picard-rank-one bases whose graded pieces are
//! all infinite cyclic, plus the even-Betti arithmetic of fibrations.
//!
//! A class is stored as `Σ c_i·H^i` with rational `c_i`. The integral lattice
//! only enters when a class is read back in generator units:
//!
//! ```text
//! H^2 = n·Σ,   H·Σ = m·P,   H^N = d·pt
//! ```

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::rational::{format_rational, int};
use crate::exactalg::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicChowRing {
    pub name: String,
    pub dim: usize,
    /// `H^2 = n·Σ`
    pub n: i64,
    /// `H·Σ = m·P`
    pub m: i64,
    /// `H^N = d·pt`
    pub d: i64,
    pub fano_index: i64,
    /// `b_0, b_2, ..., b_{2N}`
    pub betti_even: Vec<u64>,
}

impl CyclicChowRing {
    pub fn new(name: &str, dim: usize, n: i64, m: i64, d: i64, fano_index: i64) -> Result<Self> {
        if dim == 0 || n <= 0 || m <= 0 || d <= 0 || fano_index <= 0 {
            return Err(Error::Domain(format!(
                "invalid lattice data for {name}: dim={dim} n={n} m={m} d={d} r={fano_index}"
            )));
        }
        // the top generator must agree with the codim-1/2/3 generators when they coincide
        let consistent = match dim {
            1 => d == 1,
            2 => d == n,
            3 => d == n * m,
            5 => d % (n * m) == 0,
            _ => true,
        };
        if !consistent {
            return Err(Error::Domain(format!(
                "lattice constants (n,m,d)=({n},{m},{d}) are inconsistent in dimension {dim}"
            )));
        }
        Ok(CyclicChowRing {
            name: name.to_string(),
            dim,
            n,
            m,
            d,
            fano_index,
            betti_even: vec![1; dim + 1],
        })
    }

    pub fn p5() -> Self {
        Self::new("P5", 5, 1, 1, 1, 6).unwrap()
    }

    pub fn q5() -> Self {
        Self::new("Q5", 5, 1, 2, 2, 5).unwrap()
    }

    /// The five-dimensional contact homogeneous manifold of type G2.
    pub fn kg2() -> Self {
        Self::new("KG2", 5, 3, 2, 18, 3).unwrap()
    }

    pub fn p4() -> Self {
        Self::new("P4", 4, 1, 1, 1, 5).unwrap()
    }

    /// Projective space of any dimension.
    pub fn projective(dim: usize) -> Self {
        Self::new(&format!("P{dim}"), dim, 1, 1, 1, dim as i64 + 1).unwrap()
    }

    /// Looks up a built-in base by name.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "P5" => Ok(Self::p5()),
            "Q5" => Ok(Self::q5()),
            "KG2" => Ok(Self::kg2()),
            "P4" => Ok(Self::p4()),
            _ => Err(Error::UnknownBase(name.to_string())),
        }
    }

    /// The three Picard-rank-one homogeneous 5-folds, in registry order.
    pub fn five_folds() -> Vec<Self> {
        vec![Self::p5(), Self::q5(), Self::kg2()]
    }

    pub fn registry_names() -> &'static [&'static str] {
        &["P5", "Q5", "KG2", "P4"]
    }

    /// Multiple of `H^codim` that equals the lattice generator of `A^codim`.
    ///
    /// Undefined for codimension 4 on 5-folds and anything between 4 and `N`.
    pub fn generator_scale(&self, codim: usize) -> Result<i64> {
        match codim {
            0 | 1 => Ok(1),
            c if c == self.dim => Ok(self.d),
            2 => Ok(self.n),
            3 => Ok(self.n * self.m),
            c => Err(Error::UndefinedGenerator(c)),
        }
    }
}

impl fmt::Display for CyclicChowRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Graded class `Σ coeffs[i]·H^i` on a cyclic Chow ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    ring: Arc<CyclicChowRing>,
    coeffs: Vec<Rational>,
}

impl ChowClass {
    pub fn zero(ring: &Arc<CyclicChowRing>) -> Self {
        ChowClass {
            ring: Arc::clone(ring),
            coeffs: vec![Rational::zero(); ring.dim + 1],
        }
    }

    pub fn one(ring: &Arc<CyclicChowRing>) -> Self {
        Self::h_power(ring, 0, Rational::one())
    }

    /// `c·H^i`; zero when `i` exceeds the dimension.
    pub fn h_power(ring: &Arc<CyclicChowRing>, i: usize, c: Rational) -> Self {
        let mut x = Self::zero(ring);
        if i <= ring.dim {
            x.coeffs[i] = c;
        }
        x
    }

    /// `k` times the lattice generator of `A^codim`.
    pub fn from_generator(ring: &Arc<CyclicChowRing>, codim: usize, k: Rational) -> Result<Self> {
        let scale = ring.generator_scale(codim)?;
        Ok(Self::h_power(ring, codim, k / int(scale)))
    }

    pub fn ring(&self) -> &Arc<CyclicChowRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, codim: usize) -> Rational {
        self.coeffs.get(codim).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Codimension when exactly one graded piece is nonzero.
    pub fn pure_codim(&self) -> Option<usize> {
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    fn check_ring(&self, other: &ChowClass) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(
                self.ring.name.clone(),
                other.ring.name.clone(),
            ))
        }
    }

    /// Graded product truncated above the dimension.
    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ring(other)?;
        let n = self.ring.dim;
        let mut out = Self::zero(&self.ring);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.check_ring(other)?;
        Ok(ChowClass {
            ring: Arc::clone(&self.ring),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> ChowClass {
        ChowClass {
            ring: Arc::clone(&self.ring),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> ChowClass {
        let mut acc = Self::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Multiplication by `H^k` (shift in codimension).
    pub fn times_h_power(&self, k: usize) -> ChowClass {
        let mut out = Self::zero(&self.ring);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= self.ring.dim {
                out.coeffs[i + k] = c.clone();
            }
        }
        out
    }

    /// Top intersection number: the point-class coefficient.
    pub fn degree(&self) -> Rational {
        &self.coeffs[self.ring.dim] * int(self.ring.d)
    }

    /// Coefficient against the lattice generator of `A^codim`.
    ///
    /// The class must be pure of that codimension (or zero).
    pub fn in_generator_units(&self, codim: usize) -> Result<Rational> {
        let scale = self.ring.generator_scale(codim)?;
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(i, c)| i != codim && !c.is_zero())
        {
            return Err(Error::NotPure(codim));
        }
        Ok(self.coeff(codim) * int(scale))
    }

    /// Whether the pure class is an integral multiple of its generator.
    pub fn is_integral(&self, codim: usize) -> Result<bool> {
        Ok(self.in_generator_units(codim)?.is_integer())
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format_rational(c),
                1 => format!("{}*H", format_rational(c)),
                _ => format!("{}*H^{}", format_rational(c), i),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Fiber types whose cohomology is one class in every even degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FiberKind {
    ProjectiveSpace,
    OddQuadric,
    /// Two middle classes; not handled.
    EvenQuadric,
}

/// Even Betti numbers `b_0, b_2, ..., b_{2 dim}` of the total space of a
/// smooth fibration with fiber of dimension `fiber_dim`.
pub fn betti_of_fibration(base: &[u64], fiber_dim: usize, kind: FiberKind) -> Result<Vec<u64>> {
    match kind {
        FiberKind::ProjectiveSpace => {}
        FiberKind::OddQuadric if fiber_dim % 2 == 1 => {}
        FiberKind::OddQuadric => {
            return Err(Error::Domain(format!(
                "odd quadric fiber needs odd dimension, got {fiber_dim}"
            )))
        }
        FiberKind::EvenQuadric => {
            return Err(Error::Domain("even-dimensional quadric fibers are unsupported".into()))
        }
    }
    let len = base.len() + fiber_dim;
    Ok((0..len)
        .map(|i| {
            (0..=fiber_dim)
                .filter(|j| *j <= i && i - j < base.len())
                .map(|j| base[i - j])
                .sum()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BettiViolation {
    /// Deconvolution leaves a nonzero tail: the total is not of fibration type.
    Residual { degree: usize, excess: i64 },
    Negative { degree: usize, value: i64 },
    /// `b_lower > b_upper` below the middle degree.
    HardLefschetz {
        lower_degree: usize,
        lower: i64,
        upper_degree: usize,
        upper: i64,
    },
    Asymmetric { degree: usize, mirror_degree: usize },
}

impl fmt::Display for BettiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BettiViolation::Residual { degree, excess } => {
                write!(f, "residual {excess} left in degree {degree}")
            }
            BettiViolation::Negative { degree, value } => {
                write!(f, "b_{degree}(Z) = {value} < 0")
            }
            BettiViolation::HardLefschetz {
                lower_degree,
                lower,
                upper_degree,
                upper,
            } => write!(
                f,
                "hard Lefschetz: b_{lower_degree}(Z) = {lower} > b_{upper_degree}(Z) = {upper}"
            ),
            BettiViolation::Asymmetric {
                degree,
                mirror_degree,
            } => write!(f, "Poincare duality: b_{degree}(Z) != b_{mirror_degree}(Z)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BaseBetti {
    Feasible(Vec<u64>),
    Infeasible {
        /// Solved even Betti numbers of the would-be base.
        solved: Vec<i64>,
        violation: BettiViolation,
    },
}

impl BaseBetti {
    pub fn is_feasible(&self) -> bool {
        matches!(self, BaseBetti::Feasible(_))
    }
}

/// Solves `b_{2i}(X) = Σ_{j ≤ s} b_{2i-2j}(Z)` for the base of a `P^s`-fibration
/// and checks the result against Poincare duality and hard Lefschetz.
pub fn solve_base_betti(total: &[u64], fiber_dim: usize) -> Result<BaseBetti> {
    if total.len() <= fiber_dim {
        return Err(Error::DimensionMismatch(format!(
            "total space of dimension {} cannot carry a P^{fiber_dim}-fibration",
            total.len().saturating_sub(1)
        )));
    }
    let base_len = total.len() - fiber_dim;
    let mut solved: Vec<i64> = Vec::with_capacity(base_len);
    for i in 0..base_len {
        let below: i64 = (1..=fiber_dim.min(i)).map(|j| solved[i - j]).sum();
        solved.push(total[i] as i64 - below);
    }
    let infeasible = |solved: Vec<i64>, violation| Ok(BaseBetti::Infeasible { solved, violation });
    for i in base_len..total.len() {
        let conv: i64 = (0..=fiber_dim)
            .filter(|j| *j <= i && i - j < base_len)
            .map(|j| solved[i - j])
            .sum();
        if conv != total[i] as i64 {
            return infeasible(
                solved,
                BettiViolation::Residual {
                    degree: 2 * i,
                    excess: total[i] as i64 - conv,
                },
            );
        }
    }
    if let Some((i, v)) = solved.iter().enumerate().find(|(_, v)| v.is_negative()) {
        let value = *v;
        return infeasible(solved, BettiViolation::Negative { degree: 2 * i, value });
    }
    let top = base_len - 1;
    for i in 0..=top / 2 {
        if solved[i] != solved[top - i] {
            return infeasible(
                solved,
                BettiViolation::Asymmetric {
                    degree: 2 * i,
                    mirror_degree: 2 * (top - i),
                },
            );
        }
    }
    for i in 0..top / 2 {
        if solved[i] > solved[i + 1] {
            let (lower, upper) = (solved[i], solved[i + 1]);
            return infeasible(
                solved,
                BettiViolation::HardLefschetz {
                    lower_degree: 2 * i,
                    lower,
                    upper_degree: 2 * (i + 1),
                    upper,
                },
            );
        }
    }
    Ok(BaseBetti::Feasible(
        solved.into_iter().map(|v| v as u64).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn arc(r: CyclicChowRing) -> Arc<CyclicChowRing> {
        Arc::new(r)
    }

    #[test]
    fn builtin_lattice_constants() {
        let got: Vec<(i64, i64, i64)> = CyclicChowRing::five_folds()
            .iter()
            .map(|r| (r.n, r.m, r.d))
            .collect();
        assert_eq!(got, vec![(1, 1, 1), (1, 2, 2), (3, 2, 18)]);
        assert!(CyclicChowRing::five_folds()
            .iter()
            .all(|r| r.betti_even == vec![1; 6]));
        assert!(matches!(
            CyclicChowRing::by_name("Gr"),
            Err(Error::UnknownBase(_))
        ));
    }

    #[test]
    fn inconsistent_lattice_rejected() {
        assert!(CyclicChowRing::new("bad", 5, 3, 2, 10, 3).is_err());
        assert!(CyclicChowRing::new("bad3", 3, 1, 2, 1, 3).is_err());
    }

    #[test]
    fn products_on_q5_and_kg2() {
        let q5 = arc(CyclicChowRing::q5());
        let h2 = ChowClass::h_power(&q5, 2, int(1));
        let h3 = ChowClass::h_power(&q5, 3, int(1));
        let top = h2.mul(&h3).unwrap();
        assert_eq!(top.coeff(5), int(1));
        assert_eq!(top.degree(), int(2));
        assert_eq!(top.mul(&ChowClass::one(&q5)).unwrap(), top);

        let kg2 = arc(CyclicChowRing::kg2());
        let sigma = ChowClass::from_generator(&kg2, 2, int(1)).unwrap();
        let sq = sigma.mul(&sigma).unwrap();
        assert_eq!(sq.coeff(4), rat(1, 9));
        let h = ChowClass::h_power(&kg2, 1, int(1));
        assert_eq!(h.mul(&sq).unwrap().degree(), int(2));
    }

    #[test]
    fn top_degrees() {
        for (name, d) in [("Q5", 2), ("KG2", 18), ("P5", 1)] {
            let r = arc(CyclicChowRing::by_name(name).unwrap());
            assert_eq!(ChowClass::h_power(&r, 5, int(1)).degree(), int(d));
            assert_eq!(ChowClass::zero(&r).degree(), int(0));
        }
    }

    #[test]
    fn ring_mismatch() {
        let a = ChowClass::one(&arc(CyclicChowRing::q5()));
        let b = ChowClass::one(&arc(CyclicChowRing::p5()));
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch(_, _))));
    }

    #[test]
    fn generator_units() {
        let q5 = arc(CyclicChowRing::q5());
        let c2 = ChowClass::h_power(&q5, 2, int(2));
        assert_eq!(c2.in_generator_units(2).unwrap(), int(2));
        let kg2 = arc(CyclicChowRing::kg2());
        let c2 = ChowClass::h_power(&kg2, 2, int(2));
        assert_eq!(c2.in_generator_units(2).unwrap(), int(6));
        let h = ChowClass::h_power(&kg2, 1, int(1));
        assert_eq!(h.in_generator_units(1).unwrap(), int(1));
        assert!(matches!(
            ChowClass::h_power(&q5, 4, int(1)).in_generator_units(4),
            Err(Error::UndefinedGenerator(4))
        ));
        let half_p = ChowClass::h_power(&q5, 3, rat(1, 4));
        assert!(!half_p.is_integral(3).unwrap());
        assert!(matches!(
            ChowClass::one(&q5).in_generator_units(2),
            Err(Error::NotPure(2))
        ));
    }

    #[test]
    fn fibration_betti() {
        assert_eq!(
            betti_of_fibration(&[1; 6], 2, FiberKind::ProjectiveSpace).unwrap(),
            vec![1, 2, 3, 3, 3, 3, 2, 1]
        );
        assert_eq!(
            betti_of_fibration(&[1; 6], 0, FiberKind::ProjectiveSpace).unwrap(),
            vec![1; 6]
        );
        assert_eq!(
            betti_of_fibration(&[1, 1], 1, FiberKind::ProjectiveSpace).unwrap(),
            vec![1, 2, 1]
        );
        assert_eq!(
            betti_of_fibration(&[1; 5], 3, FiberKind::OddQuadric).unwrap(),
            betti_of_fibration(&[1; 5], 3, FiberKind::ProjectiveSpace).unwrap()
        );
        assert!(betti_of_fibration(&[1; 5], 4, FiberKind::EvenQuadric).is_err());
    }

    #[test]
    fn base_betti_lefschetz_violation() {
        let total = [1, 2, 3, 3, 3, 3, 2, 1];
        match solve_base_betti(&total, 1).unwrap() {
            BaseBetti::Infeasible { solved, violation } => {
                assert_eq!(solved, vec![1, 1, 2, 1, 2, 1, 1]);
                assert_eq!(
                    violation,
                    BettiViolation::HardLefschetz {
                        lower_degree: 4,
                        lower: 2,
                        upper_degree: 6,
                        upper: 1
                    }
                );
            }
            other => panic!("expected infeasible, got {other:?}"),
        }
        assert_eq!(
            solve_base_betti(&total, 2).unwrap(),
            BaseBetti::Feasible(vec![1; 6])
        );
        let p1_p5 = betti_of_fibration(&[1; 6], 1, FiberKind::ProjectiveSpace).unwrap();
        assert_eq!(
            solve_base_betti(&p1_p5, 1).unwrap(),
            BaseBetti::Feasible(vec![1; 6])
        );
    }

    #[test]
    fn residual_and_negative() {
        assert!(matches!(
            solve_base_betti(&[1, 1, 1], 1).unwrap(),
            BaseBetti::Infeasible {
                violation: BettiViolation::Residual { .. },
                ..
            }
        ));
        assert!(matches!(
            solve_base_betti(&[1, 0, 0, 1], 1).unwrap(),
            BaseBetti::Infeasible {
                violation: BettiViolation::Negative { .. },
                ..
            }
        ));
    }
}
