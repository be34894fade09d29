//! Slope polynomial systems.
//!
//! If `-K_π + τπ*H` contracts `P(E)` onto a variety of dimension `κ`, then
//! `(-K_π + τπ*H)^i · π*H^{n-i} = 0` for every `κ < i ≤ n`. After dividing by
//! `r^{r-1}·deg H^N` each condition becomes
//!
//! ```text
//! Σ_k C(i, i-k) δ_{k+1-r} τ^{i-k}
//! ```
//!
//! with `δ_j` the `H`-coefficient of `d_j(E)`. In the symbolic form
//! `δ_2 = a`, `δ_3 = b`, and the `δ_j` above the rank are eliminated through
//! `Δ_j = 0`; for rank 3 this gives `δ_4 = a²` and `δ_5 = 2ab`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chow::CyclicChowRing;
use crate::classes::{d_series, BundleData};
use crate::error::{Error, Result};
use crate::exactalg::rational::{binomial, from_bigint, int, rational_sqrt};
use crate::exactalg::{exact_divide, Division, MultiPoly, Rational, UniPoly};
use crate::par::Execution;

pub const TAU: &str = "tau";

/// Overall constant of the rank-3 resultant over its three factors.
pub const RESULTANT_CONSTANT: i64 = 9;

#[derive(Debug, Clone, PartialEq)]
pub struct SlopeSystem {
    pub base: Arc<CyclicChowRing>,
    pub rank: usize,
    pub dim_bound: usize,
    /// `(i, polynomial)` for `dim_bound < i ≤ n`, in decreasing `i`.
    pub polys: Vec<(usize, MultiPoly)>,
}

impl SlopeSystem {
    /// Dimension of `P(E)`.
    pub fn total_dim(&self) -> usize {
        self.base.dim + self.rank - 1
    }

    pub fn poly(&self, i: usize) -> Option<&MultiPoly> {
        self.polys.iter().find(|(j, _)| *j == i).map(|(_, p)| p)
    }

    /// Substitutes values for the symbolic `d`-coefficients.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> SlopeSystem {
        let polys = self
            .polys
            .iter()
            .map(|(i, p)| {
                let q = values.iter().fold(p.clone(), |q, (v, x)| q.eval(v, x));
                (*i, q)
            })
            .collect();
        SlopeSystem {
            polys,
            ..self.clone()
        }
    }
}

/// Symbol used for `δ_j`.
pub fn d_symbol(j: usize) -> String {
    match j {
        2 => "a".to_string(),
        3 => "b".to_string(),
        _ => format!("d{j}"),
    }
}

/// Symbolic `δ_0..=δ_max`: free up to the rank, then forced by `Δ_j = 0`.
pub fn symbolic_d_coefficients(rank: usize, max: usize) -> Vec<MultiPoly> {
    // e_j = (-1)^j δ_j are the coefficients of d(-t); Δ = 1/d(-t).
    let free = |j: usize| -> MultiPoly {
        match j {
            0 => MultiPoly::one(),
            1 => MultiPoly::zero(),
            _ => MultiPoly::var(&d_symbol(j)),
        }
    };
    let sign = |j: usize, p: MultiPoly| if j.is_multiple_of(2) { p } else { -p };
    let mut e: Vec<MultiPoly> = Vec::with_capacity(max + 1);
    let mut delta: Vec<MultiPoly> = vec![MultiPoly::one()];
    for j in 0..=max {
        if j <= rank {
            e.push(sign(j, free(j)));
            if j > 0 {
                let mut acc = MultiPoly::zero();
                for l in 1..=j {
                    acc = &acc + &(&e[l] * &delta[j - l]);
                }
                delta.push(-acc);
            }
        } else {
            let mut acc = MultiPoly::zero();
            for l in 1..=rank {
                acc = &acc + &(&delta[l] * &e[j - l]);
            }
            e.push(-acc);
        }
    }
    e.into_iter().enumerate().map(|(j, p)| sign(j, p)).collect()
}

fn check_bound(base: &CyclicChowRing, rank: usize, dim_bound: usize) -> Result<usize> {
    if rank == 0 {
        return Err(Error::Domain("rank must be positive".into()));
    }
    let n = base.dim + rank - 1;
    if dim_bound >= n {
        return Err(Error::Domain(format!(
            "dimension bound {dim_bound} leaves no conditions on a {n}-dimensional P(E)"
        )));
    }
    Ok(n)
}

fn assemble(rank: usize, n: usize, dim_bound: usize, delta: &[MultiPoly], base_dim: usize) -> Vec<(usize, MultiPoly)> {
    let tau = MultiPoly::var(TAU);
    ((dim_bound + 1)..=n)
        .rev()
        .map(|i| {
            let mut p = MultiPoly::zero();
            for k in (rank - 1)..=i {
                let j = k + 1 - rank;
                if j > base_dim {
                    break;
                }
                let c = from_bigint(binomial(i as i64, (i - k) as i64));
                p = &p + &(&delta[j] * &tau.pow((i - k) as u32)).scale(&c);
            }
            (i, p)
        })
        .collect()
}

/// The system with symbolic `d`-coefficients.
///
/// For rank 3 on a five-dimensional base and `dim_bound = 5` this is the
/// quintic/quartic pair `f = 21τ⁵ + 35aτ³ + 21bτ² + 7a²τ + 2ab`,
/// `g = 15τ⁴ + 15aτ² + 6bτ + a²`.
pub fn build_slope_system(base: &Arc<CyclicChowRing>, rank: usize, dim_bound: usize) -> Result<SlopeSystem> {
    let n = check_bound(base, rank, dim_bound)?;
    let delta = symbolic_d_coefficients(rank, base.dim);
    Ok(SlopeSystem {
        base: Arc::clone(base),
        rank,
        dim_bound,
        polys: assemble(rank, n, dim_bound, &delta, base.dim),
    })
}

/// The system for a concrete bundle, with rational coefficients.
pub fn build_numeric_slope_system(bundle: &BundleData, dim_bound: usize) -> Result<SlopeSystem> {
    let base = bundle.ring();
    let rank = bundle.rank();
    let n = check_bound(base, rank, dim_bound)?;
    let d = d_series(bundle, base.dim);
    let delta: Vec<MultiPoly> = (0..=base.dim).map(|j| MultiPoly::constant(d.h_coeff(j))).collect();
    Ok(SlopeSystem {
        base: Arc::clone(base),
        rank,
        dim_bound,
        polys: assemble(rank, n, dim_bound, &delta, base.dim),
    })
}

/// `res_τ(f, g)` for a two-polynomial system, `f` being the higher index.
pub fn resultant_condition(sys: &SlopeSystem) -> Result<MultiPoly> {
    resultant_condition_with(sys, Execution::default())
}

pub fn resultant_condition_with(sys: &SlopeSystem, exec: Execution) -> Result<MultiPoly> {
    match sys.polys.as_slice() {
        [(_, f), (_, g)] => Ok(crate::exactalg::SylvesterMatrix::new(f, g, TAU)?.determinant_with(exec)),
        _ => Err(Error::Domain(format!(
            "resultant needs exactly two slope polynomials, got {}",
            sys.polys.len()
        ))),
    }
}

/// The three factors `a`, `216b² + 49a³`, `250047b⁴ − 222804a³b² + 132496a⁶`.
pub fn resultant_factors() -> [MultiPoly; 3] {
    let a = MultiPoly::var("a");
    let b = MultiPoly::var("b");
    let c = |n: i64| MultiPoly::from(n);
    [
        a.clone(),
        c(216) * b.pow(2) + c(49) * a.pow(3),
        c(250047) * b.pow(4) - c(222804) * a.pow(3) * b.pow(2) + c(132496) * a.pow(6),
    ]
}

/// Divides the resultant by each factor in turn; the quotient must be constant.
pub fn resultant_quotient(res: &MultiPoly) -> Result<Rational> {
    let mut q = res.clone();
    for f in resultant_factors() {
        q = q
            .div_exact(&f)
            .ok_or_else(|| Error::Inconsistent(format!("resultant not divisible by {f}")))?;
    }
    q.constant_value()
        .ok_or_else(|| Error::Inconsistent(format!("non-constant cofactor {q}")))
}

/// A slope candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeRoot {
    pub tau: Rational,
    /// Multiplicity as a root of `gcd(f, g)`.
    pub multiplicity: usize,
    pub k: Option<i64>,
}

impl SlopeRoot {
    /// `0 ≤ τ < r_Y`.
    pub fn admissible(&self, base: &CyclicChowRing) -> bool {
        !self.tau.is_negative() && self.tau < int(base.fano_index)
    }
}

fn rank3_pair(k: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let base = Arc::new(CyclicChowRing::q5());
    let sys = build_slope_system(&base, 3, 5)?;
    let a = MultiPoly::from(-6) * k.pow(2);
    let b = MultiPoly::from(7) * k.pow(3);
    let sub = |p: &MultiPoly| p.substitute("a", &a).substitute("b", &b);
    Ok((sub(sys.poly(7).expect("i = 7")), sub(sys.poly(6).expect("i = 6"))))
}

fn divide_out(p: &MultiPoly, divisor: &MultiPoly, expected: &MultiPoly) -> Result<()> {
    match exact_divide(p, divisor, TAU)? {
        Division::Exact(q) if &q == expected => Ok(()),
        Division::Exact(q) => Err(Error::Inconsistent(format!(
            "quotient {q} differs from {expected}"
        ))),
        Division::Remainder { remainder, .. } => Err(Error::Inconsistent(format!(
            "division by {divisor} leaves {remainder}"
        ))),
    }
}

/// Checks `f = 21(τ−2k)²(τ+k)(τ²+3kτ−k²)` and `g = 3(τ−2k)(5τ³+10kτ²−10k²τ−6k³)`
/// along `a = −6k²`, `b = 7k³`, with `k` a number or the variable `k`.
pub fn check_family_factorizations(k: &MultiPoly) -> Result<()> {
    let (f, g) = rank3_pair(k)?;
    let t = MultiPoly::var(TAU);
    let c = |n: i64| MultiPoly::from(n);
    let root = &t - &(c(2) * k.clone());
    let f_cof = c(21) * (&t + k) * (t.pow(2) + c(3) * k.clone() * t.clone() - k.pow(2));
    let g_cof = c(3)
        * (c(5) * t.pow(3) + c(10) * k.clone() * t.pow(2) - c(10) * k.pow(2) * t.clone() - c(6) * k.pow(3));
    divide_out(&f, &root.pow(2), &f_cof)?;
    divide_out(&g, &root, &g_cof)
}

/// The common slope along the family `a = −6k²`, `b = 7k³`.
pub fn analyze_family_roots(k: i64) -> Result<SlopeRoot> {
    if k == 0 {
        return Err(Error::Domain("the family parameter k must be nonzero".into()));
    }
    let km = MultiPoly::from(k);
    check_family_factorizations(&km)?;
    let (f, g) = rank3_pair(&km)?;
    let gcd = UniPoly::from_multi(&f, TAU)?.gcd(&UniPoly::from_multi(&g, TAU)?);
    let expected = UniPoly::new(vec![int(-2 * k), int(1)]);
    if gcd != expected {
        return Err(Error::Inconsistent(format!("gcd is {gcd}, expected {expected}")));
    }
    Ok(SlopeRoot {
        tau: int(2 * k),
        multiplicity: 1,
        k: Some(k),
    })
}

/// Real and rational solutions of the quartic factor as a quadratic in
/// `u = b²/a³`: `250047u² − 222804u + 132496`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarticCheck {
    pub discriminant: BigInt,
    pub rational_u: Vec<Rational>,
}

impl QuarticCheck {
    /// No rational `(a, b)` with `a ≠ 0` lies on the quartic factor.
    pub fn excludes_rational_points(&self) -> bool {
        self.rational_u.is_empty()
    }
}

pub fn quartic_factor_check() -> QuarticCheck {
    let (p, q, r) = (BigInt::from(250047), BigInt::from(-222804), BigInt::from(132496));
    let disc = &q * &q - BigInt::from(4) * &p * &r;
    let mut rational_u = Vec::new();
    if !disc.is_negative() {
        if let Some(s) = rational_sqrt(&from_bigint(disc.clone())) {
            let two_p = from_bigint(BigInt::from(2) * &p);
            for sign in [-Rational::one(), Rational::one()] {
                let u = (from_bigint(-q.clone()) + sign * s.clone()) / two_p.clone();
                // b² = u·a³ needs u·a³ to be a rational square
                if !u.is_zero() && !rational_u.contains(&u) {
                    rational_u.push(u);
                }
            }
        }
    }
    QuarticCheck {
        discriminant: disc,
        rational_u,
    }
}
