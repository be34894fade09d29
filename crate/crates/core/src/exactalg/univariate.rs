//! Dense univariate polynomials over Q: gcd, evaluation and integer roots.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::MultiPoly;
use super::rational::{common_denominator, from_bigint, positive_divisors, Rational};
use crate::error::{Error, Result};

/// Coefficients in ascending order, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => UniPoly::new(self.coeffs.iter().map(|c| c / lc).collect()),
        }
    }

    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UniPoly::default(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lc;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Reads a polynomial that involves at most the variable `var`.
    pub fn from_multi(p: &MultiPoly, var: &str) -> Result<UniPoly> {
        let q = p.compact();
        if q.vars().iter().any(|v| v != var) {
            return Err(Error::Domain(format!(
                "expected a polynomial in {var} only, got {p}"
            )));
        }
        let deg = q.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in q.terms() {
            let e = m.0.first().copied().unwrap_or(0) as usize;
            coeffs[e] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_multi(&self, var: &str) -> MultiPoly {
        MultiPoly::from_terms(
            &[var],
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    /// Coefficients scaled by the common denominator.
    fn integer_coefficients(&self) -> Vec<BigInt> {
        let den = common_denominator(&self.coeffs);
        self.coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
            .collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi("x"))
    }
}

/// All integer roots of a univariate polynomial, with multiplicity, ascending.
///
/// Candidates are the divisors of the trailing nonzero coefficient after
/// clearing denominators; each hit is divided out until it stops dividing.
pub fn integer_roots(p: &MultiPoly) -> Result<Vec<BigInt>> {
    let var = match p.compact().vars() {
        [] => "x".to_string(),
        [v] => v.clone(),
        _ => {
            return Err(Error::Domain(format!(
                "integer_roots expects a univariate polynomial, got {p}"
            )))
        }
    };
    integer_roots_uni(&UniPoly::from_multi(p, &var)?)
}

pub fn integer_roots_uni(p: &UniPoly) -> Result<Vec<BigInt>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ints = p.integer_coefficients();
    let zero_mult = ints.iter().take_while(|c| c.is_zero()).count();
    let mut roots: Vec<BigInt> = vec![BigInt::zero(); zero_mult];
    let mut rest = UniPoly::new(ints[zero_mult..].iter().cloned().map(from_bigint).collect());
    let trailing = ints[zero_mult].clone();
    for d in positive_divisors(&trailing) {
        for cand in [d.clone(), -d] {
            let x = from_bigint(cand.clone());
            let lin = UniPoly::new(vec![-x.clone(), Rational::one()]);
            while rest.degree().unwrap_or(0) > 0 && rest.eval(&x).is_zero() {
                rest = rest.div_rem(&lin)?.0;
                roots.push(cand.clone());
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn roots(coeffs: &[i64]) -> Vec<i64> {
        integer_roots_uni(&UniPoly::from_ints(coeffs))
            .unwrap()
            .into_iter()
            .map(|r| i64::try_from(r).unwrap())
            .collect()
    }

    #[test]
    fn simple_roots() {
        assert_eq!(roots(&[-4, 0, 1]), vec![-2, 2]);
        assert!(roots(&[1, 0, 1]).is_empty());
        assert_eq!(roots(&[0, 0, -1, 1]), vec![0, 0, 1]);
        assert_eq!(roots(&[4, -4, 1]), vec![2, 2]);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(matches!(
            integer_roots_uni(&UniPoly::default()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn multivariate_input_rejected() {
        let p = MultiPoly::var("a") * MultiPoly::var("b");
        assert!(integer_roots(&p).is_err());
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x-2) and (x-1)(x+3)
        let p = UniPoly::from_ints(&[2, -3, 1]);
        let q = UniPoly::from_ints(&[-3, 2, 1]);
        assert_eq!(p.gcd(&q), UniPoly::from_ints(&[-1, 1]));
        let (quot, rem) = p.div_rem(&UniPoly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(quot, UniPoly::from_ints(&[-2, 1]));
        assert!(rem.is_zero());
        assert_eq!(p.eval(&int(2)), int(0));
    }
}
