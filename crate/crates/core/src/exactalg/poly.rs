//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are named; two polynomials over different variable lists are
//! unified by name before any binary operation (the left operand's order is
//! kept and unseen names are appended). Terms are ordered graded
//! lexicographically with respect to the declared variable order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Exponent vector, one entry per declared variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial(Vec::new()), c);
        }
        p
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        MultiPoly {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds `Σ c·Π var^e` from explicit terms over the given variables.
    pub fn from_terms<I>(vars: &[&str], terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        };
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.is_constant()
            .then(|| self.terms.values().next().cloned().unwrap_or_default())
    }

    /// Leading term under graded lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Re-expresses `self` over `vars`, which must contain every variable of `self`.
    fn lift_to(&self, vars: &[String]) -> MultiPoly {
        if self.vars.as_slice() == vars {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable missing"))
            .collect();
        let mut out = MultiPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            let mut exps = vec![0; vars.len()];
            // constants carry an empty exponent vector until first unified
            for (i, e) in m.0.iter().enumerate() {
                exps[map[i]] = *e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    fn unified_vars(&self, other: &MultiPoly) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn unify(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = self.unified_vars(other);
        (self.lift_to(&vars), other.lift_to(&vars))
    }

    /// Normalizes constant monomials so every key has `vars.len()` entries.
    fn normalized(mut self) -> Self {
        let n = self.vars.len();
        if self.terms.keys().any(|m| m.0.len() != n) {
            let old = std::mem::take(&mut self.terms);
            for (mut m, c) in old {
                m.0.resize(n, 0);
                self.add_term(m, c);
            }
        }
        self
    }

    /// Returns the polynomial with the variable list reordered/extended to `vars`.
    pub fn with_vars(&self, vars: &[&str]) -> MultiPoly {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        self.clone().normalized().lift_to(&vars)
    }

    /// Drops variables that no term uses.
    pub fn compact(&self) -> MultiPoly {
        let p = self.clone().normalized();
        let used: Vec<usize> = (0..p.vars.len())
            .filter(|&i| p.terms.keys().any(|m| m.0[i] > 0))
            .collect();
        let mut out = MultiPoly {
            vars: used.iter().map(|&i| p.vars[i].clone()).collect(),
            terms: BTreeMap::new(),
        };
        for (m, c) in p.terms {
            out.add_term(Monomial(used.iter().map(|&i| m.0[i]).collect()), c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Degree in `var`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: &str) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let Some(i) = self.var_index(var) else {
            return Some(0);
        };
        self.terms.keys().map(|m| m.0.get(i).copied().unwrap_or(0)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Coefficient of `var^k`, as a polynomial in the remaining variables.
    pub fn coeff_in(&self, var: &str, k: u32) -> MultiPoly {
        let p = self.clone().normalized();
        let Some(i) = p.var_index(var) else {
            return if k == 0 { p } else { MultiPoly::zero() };
        };
        let mut out = MultiPoly {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (m, c) in &p.terms {
            if m.0[i] == k {
                let mut e = m.clone();
                e.0[i] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Coefficients in `var`, index `k` holding the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: &str) -> Vec<MultiPoly> {
        match self.degree_in(var) {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff_in(var, k)).collect(),
        }
    }

    /// Substitutes `value` for `var`.
    pub fn substitute(&self, var: &str, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coefficients_in(var);
        let mut acc = MultiPoly::zero();
        // Horner in `var`
        for c in coeffs.into_iter().rev() {
            acc = &(&acc * value) + &c;
        }
        acc.drop_var(var)
    }

    pub fn eval(&self, var: &str, value: &Rational) -> MultiPoly {
        self.substitute(var, &MultiPoly::constant(value.clone()))
    }

    /// Evaluates every variable; missing names are an error.
    pub fn eval_all(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let mut p = self.clone();
        for (v, x) in values {
            p = p.eval(v, x);
        }
        p.compact().constant_value().ok_or_else(|| {
            Error::Domain(format!("unassigned variables remain in {}", p.compact()))
        })
    }

    fn drop_var(&self, var: &str) -> MultiPoly {
        let p = self.clone().normalized();
        let Some(i) = p.var_index(var) else {
            return p;
        };
        let mut out = MultiPoly {
            vars: p.vars.iter().filter(|v| *v != var).cloned().collect(),
            terms: BTreeMap::new(),
        };
        for (m, c) in p.terms {
            debug_assert_eq!(m.0[i], 0);
            let mut e = m.0;
            e.remove(i);
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Exact multivariate division. Returns `None` unless `self = q·divisor`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (mut rem, d) = self.unify(divisor);
        let (d_lm, d_lc) = d.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut quot = MultiPoly {
            vars: rem.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.div(&d_lm)?;
            let qc = c / &d_lc;
            for (dm, dc) in &d.terms {
                rem.add_term(qm.mul(dm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Makes the leading coefficient one (zero stays zero).
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.clone().normalized().unify(&other.clone().normalized());
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::constant(super::rational::int(c))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.unify(rhs);
        a = a.normalized();
        for (m, c) in b.normalized().terms {
            a.add_term(m, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.unify(rhs);
        let (a, b) = (a.normalized(), b.normalized());
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| match e {
                    1 => self.vars[i].clone(),
                    _ => format!("{}^{}", self.vars[i], e),
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Result of dividing by a polynomial with invertible leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub enum Division {
    Exact(MultiPoly),
    Remainder {
        quotient: MultiPoly,
        remainder: MultiPoly,
    },
}

impl Division {
    pub fn exact(self) -> Option<MultiPoly> {
        match self {
            Division::Exact(q) => Some(q),
            Division::Remainder { .. } => None,
        }
    }
}

/// Divides `dividend` by `divisor` as polynomials in `var`.
///
/// The leading coefficient of `divisor` in `var` must be a nonzero rational.
pub fn exact_divide(dividend: &MultiPoly, divisor: &MultiPoly, var: &str) -> Result<Division> {
    if divisor.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let dd = divisor.degree_in(var).unwrap_or(0);
    let lc = divisor
        .coeff_in(var, dd)
        .constant_value()
        .ok_or_else(|| Error::NonInvertibleLeadingCoefficient(var.to_string()))?;
    let x = MultiPoly::var(var);
    let mut rem = dividend.clone();
    let mut quot = MultiPoly::zero();
    while let Some(dr) = rem.degree_in(var) {
        if dr < dd {
            break;
        }
        let term = rem.coeff_in(var, dr).scale(&(Rational::one() / &lc)) * x.pow(dr - dd);
        rem = &rem - &(&term * divisor);
        quot = &quot + &term;
    }
    Ok(if rem.is_zero() {
        Division::Exact(quot)
    } else {
        Division::Remainder {
            quotient: quot,
            remainder: rem,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::from(n)
    }

    #[test]
    fn difference_of_squares() {
        let t = v("tau");
        let p = (&t + &c(1)) * (&t - &c(1));
        assert_eq!(p, t.pow(2) - c(1));
        assert_eq!(p.to_string(), "tau^2 - 1");
    }

    #[test]
    fn additive_identity() {
        let p = v("a") * v("b") + c(3);
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn family_cubic_product() {
        let (t, k) = (v("tau"), v("k"));
        let cubic = c(5) * t.pow(3) + c(10) * &k * t.pow(2) - c(10) * k.pow(2) * &t - c(6) * k.pow(3);
        let lhs = (&t - &(c(2) * &k)) * cubic * c(3);
        let rhs = c(15) * t.pow(4) - c(90) * k.pow(2) * t.pow(2) + c(42) * k.pow(3) * &t
            + c(36) * k.pow(4);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn unify_by_name() {
        let p = v("a") + v("b");
        let q = v("b") + v("a");
        assert_eq!(p, q);
        assert_eq!((&p - &q).num_terms(), 0);
    }

    #[test]
    fn exact_divide_factor_pair() {
        let (t, k) = (v("tau"), v("k"));
        let q = exact_divide(&(t.pow(2) - k.pow(2)), &(&t - &k), "tau").unwrap();
        assert_eq!(q, Division::Exact(&t + &k));
    }

    #[test]
    fn exact_divide_reports_remainder() {
        let t = v("tau");
        let d = exact_divide(&(t.pow(2) + c(1)), &(&t - &c(1)), "tau").unwrap();
        match d {
            Division::Remainder { quotient, remainder } => {
                assert_eq!(remainder, c(2));
                assert_eq!(quotient, &t + &c(1));
            }
            other => panic!("expected remainder, got {other:?}"),
        }
    }

    #[test]
    fn exact_divide_errors() {
        let t = v("tau");
        assert!(matches!(
            exact_divide(&t, &MultiPoly::zero(), "tau"),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            exact_divide(&t, &(v("a") * &t), "tau"),
            Err(Error::NonInvertibleLeadingCoefficient(_))
        ));
    }

    #[test]
    fn multivariate_div_exact() {
        let (a, b) = (v("a"), v("b"));
        let f = c(216) * b.pow(2) + c(49) * a.pow(3);
        let p = &f * &(&a - &b);
        assert_eq!(p.div_exact(&f), Some(&a - &b));
        assert_eq!(p.div_exact(&(&a + &c(1))), None);
    }

    #[test]
    fn substitution() {
        let (t, a) = (v("tau"), v("a"));
        let p = t.pow(2) + &a * &t;
        let q = p.substitute("a", &(c(-6) * v("k").pow(2)));
        assert_eq!(q, t.pow(2) - c(6) * v("k").pow(2) * &t);
        assert_eq!(
            p.eval_all(&[("tau", int(2)), ("a", int(3))]).unwrap(),
            int(10)
        );
    }

    #[test]
    fn degree_queries() {
        let p = v("tau").pow(3) * v("a") + c(1);
        assert_eq!(p.degree_in("tau"), Some(3));
        assert_eq!(p.degree_in("b"), Some(0));
        assert_eq!(MultiPoly::zero().degree_in("tau"), None);
        assert_eq!(p.coeff_in("tau", 3), v("a"));
        assert_eq!(p.coeff_in("tau", 0), c(1));
    }
}
