//! Sylvester matrices and their fraction-free (Bareiss) determinants.

use num_traits::One;

use super::poly::MultiPoly;
use crate::error::{Error, Result};
use crate::par::Execution;

/// Square matrix of polynomial coefficients in an eliminated variable.
///
/// The first `deg g` rows hold the shifted coefficients of `f` (leading
/// coefficient first), the remaining `deg f` rows those of `g`.
#[derive(Debug, Clone)]
pub struct SylvesterMatrix {
    entries: Vec<Vec<MultiPoly>>,
}

impl SylvesterMatrix {
    pub fn new(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<Self> {
        let df = positive_degree(f, var)?;
        let dg = positive_degree(g, var)?;
        let dim = df + dg;
        let fc = f.coefficients_in(var);
        let gc = g.coefficients_in(var);
        let mut entries = vec![vec![MultiPoly::zero(); dim]; dim];
        for (i, row) in entries.iter_mut().enumerate().take(dg) {
            for (j, c) in fc.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
        }
        for (i, row) in entries.iter_mut().skip(dg).enumerate() {
            for (j, c) in gc.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
        }
        Ok(SylvesterMatrix { entries })
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<MultiPoly>] {
        &self.entries
    }

    pub fn determinant(&self) -> MultiPoly {
        bareiss_determinant(self.entries.clone(), Execution::default())
    }

    pub fn determinant_with(&self, exec: Execution) -> MultiPoly {
        bareiss_determinant(self.entries.clone(), exec)
    }
}

fn positive_degree(p: &MultiPoly, var: &str) -> Result<usize> {
    match p.degree_in(var) {
        Some(d) if d > 0 => Ok(d as usize),
        _ => Err(Error::DegreeZero(var.to_string())),
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact in the polynomial ring; row swaps flip the sign.
/// Rows below the pivot are updated independently and may run in parallel.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>, exec: Execution) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one();
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let prev_ref = &prev;
        exec.for_each_mut(rest, |_, row| {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = &(pivot * &row[j]) - &(&lead * &pivot_row[j]);
                row[j] = if prev_ref.is_one() {
                    num
                } else {
                    num.div_exact(prev_ref)
                        .expect("Bareiss step must divide exactly")
                };
            }
            row[k] = MultiPoly::zero();
        });
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

trait IsOne {
    fn is_one(&self) -> bool;
}

impl IsOne for MultiPoly {
    fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

/// Resultant of `f` and `g` with respect to `var`, as the Sylvester determinant.
pub fn sylvester_resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    Ok(SylvesterMatrix::new(f, g, var)?.determinant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::int;

    fn v(s: &str) -> MultiPoly {
        MultiPoly::var(s)
    }

    fn naive_det(m: &[Vec<MultiPoly>]) -> MultiPoly {
        // cofactor expansion along the first row
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = MultiPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * &naive_det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn linear_resultant() {
        let t = v("tau");
        let r = sylvester_resultant(&(&t - &v("a")), &(&t - &v("b")), "tau").unwrap();
        assert_eq!(r, v("a") - v("b"));
    }

    #[test]
    fn common_root_gives_zero() {
        let t = v("tau");
        let r = sylvester_resultant(&t.pow(2), &t, "tau").unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn degree_zero_rejected() {
        let t = v("tau");
        assert!(matches!(
            sylvester_resultant(&MultiPoly::from(3), &t, "tau"),
            Err(Error::DegreeZero(_))
        ));
    }

    #[test]
    fn dimension_is_degree_sum() {
        let t = v("tau");
        let f = t.pow(5) + v("a") * &t;
        let g = t.pow(4) + MultiPoly::from(1);
        let s = SylvesterMatrix::new(&f, &g, "tau").unwrap();
        assert_eq!(s.dimension(), 9);
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let (a, b, t) = (v("a"), v("b"), v("tau"));
        let f = MultiPoly::from(2) * t.pow(3) + &a * t.pow(2) - &b;
        let g = t.pow(2) * &b + &a * &t + MultiPoly::from(1);
        let s = SylvesterMatrix::new(&f, &g, "tau").unwrap();
        assert_eq!(s.determinant(), naive_det(s.entries()));
        assert_eq!(
            s.determinant_with(Execution::Sequential),
            s.determinant_with(Execution::Parallel)
        );
    }

    #[test]
    fn numeric_resultant_product_formula() {
        // res((x-1)(x-2), (x-3)) = (1-3)(2-3) = 2
        let t = v("tau");
        let f = (&t - &MultiPoly::from(1)) * (&t - &MultiPoly::from(2));
        let g = &t - &MultiPoly::from(3);
        let r = sylvester_resultant(&f, &g, "tau").unwrap();
        assert_eq!(r.constant_value(), Some(int(2)));
    }
}
