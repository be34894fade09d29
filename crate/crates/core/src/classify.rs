//! Enumeration of rank-3 candidates on five-dimensional bases for a 7-fold
//! with two `P²`-fibrations.
//!
//! Stages, in order:
//!
//! 1. the Betti bound on the other contraction;
//! 2. the Diophantine equation `216·n·d₃² + 49·m²·d₂³ = 0`;
//! 3. Chern recovery from `a = −6k²`, `b = 7k³` in the normalized window;
//! 4. the image-dimension check through intersection numbers;
//! 5. the unimodularity filter against every base `Z`;
//! 6. named external exclusions.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::chow::{betti_of_fibration, solve_base_betti, BaseBetti, CyclicChowRing, FiberKind};
use crate::classes::{d_series, BundleData};
use crate::error::Result;
use crate::exactalg::rational::{as_i64, int, rat};
use crate::exactalg::{MultiPoly, Rational};
use crate::par::Execution;
use crate::projbundle::{anticanonical_power_degree, ProjBundleRing};
use crate::slopes::{quartic_factor_check, QuarticCheck};

/// Citation key of the result excluding `(P5; 2,2,1)` over `Z = P5`.
pub const SAT85: &str = "[Sat85]";

/// Fixed positive constant `c` with `(−K+τH)^5·H^2 = c·d_Y·k³` for rank 3.
pub const FIVE_FOLD_NONVANISHING: i64 = 243;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub d2: i64,
    pub d3: i64,
    /// Family parameter, when `(d2, d3) = (−6nk², 7nmk³)`.
    pub k: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiophantineReport {
    pub base: String,
    pub n: i64,
    pub m: i64,
    pub k_bound: i64,
    pub d2_bound: i64,
    pub d3_bound: i64,
    /// Nonzero solutions in the box, sorted by `(d2, d3)`.
    pub solutions: Vec<DiophantineSolution>,
    /// The family satisfies the equation identically in `k`.
    pub family_identity: bool,
    /// Every family member with `|k| ≤ k_bound` lies in the box, and a
    /// per-`d2` square-root solve finds exactly the scanned solutions.
    pub envelope_ok: bool,
}

impl DiophantineReport {
    pub fn all_on_family(&self) -> bool {
        self.solutions.iter().all(|s| s.k.is_some())
    }

    /// Positive family parameters found.
    pub fn positive_ks(&self) -> Vec<i64> {
        let mut ks: Vec<i64> = self.solutions.iter().filter_map(|s| s.k).filter(|k| *k > 0).collect();
        ks.sort_unstable();
        ks.dedup();
        ks
    }
}

fn lhs(n: i64, m: i64, d2: i64, d3: i64) -> i128 {
    let (n, m, d2, d3) = (n as i128, m as i128, d2 as i128, d3 as i128);
    216 * n * d3 * d3 + 49 * m * m * d2 * d2 * d2
}

fn family_k(n: i64, m: i64, d2: i64, d3: i64) -> Option<i64> {
    if d3 % (7 * n * m) != 0 {
        return None;
    }
    let k = (d3 / (7 * n * m)).cbrt();
    (k != 0 && d3 == 7 * n * m * k * k * k && d2 == -6 * n * k * k).then_some(k)
}

fn scaled_bound(x: i64) -> i64 {
    // ×1.2, rounded up
    (x * 6 + 4) / 5
}

/// Integer solutions of `216·n·d₃² + 49·m²·d₂³ = 0` in a box sized from `k_bound`.
pub fn solve_diophantine(base: &CyclicChowRing, k_bound: i64, exec: Execution) -> DiophantineReport {
    let (n, m) = (base.n, base.m);
    let kb = k_bound.max(0);
    let d2_bound = scaled_bound(6 * n * kb * kb);
    let d3_bound = scaled_bound(7 * n * m * kb * kb * kb);
    let scanned: Vec<Vec<DiophantineSolution>> = exec.filter_map_range(-d2_bound, d2_bound + 1, |d2| {
        let row: Vec<DiophantineSolution> = (-d3_bound..=d3_bound)
            .filter(|&d3| (d2, d3) != (0, 0) && lhs(n, m, d2, d3) == 0)
            .map(|d3| DiophantineSolution {
                d2,
                d3,
                k: family_k(n, m, d2, d3),
            })
            .collect();
        (!row.is_empty()).then_some(row)
    });
    let solutions: Vec<DiophantineSolution> = scanned.into_iter().flatten().collect();

    // d3² = −49m²d2³/(216n), solved per d2
    let mut by_root = Vec::new();
    for d2 in -d2_bound..0 {
        let num = BigInt::from(-49 * m * m) * BigInt::from(d2).pow(3);
        let den = BigInt::from(216 * n);
        if (&num % &den).is_zero() {
            let sq = num / den;
            let r = sq.sqrt();
            if &r * &r == sq {
                if let Some(r) = i64::try_from(r).ok().filter(|r| *r <= d3_bound) {
                    by_root.push((d2, -r));
                    by_root.push((d2, r));
                }
            }
        }
    }
    let scanned_pairs: Vec<(i64, i64)> = solutions.iter().map(|s| (s.d2, s.d3)).collect();
    let members_inside = (1..=kb).all(|k| 6 * n * k * k <= d2_bound && 7 * n * m * k * k * k <= d3_bound);

    DiophantineReport {
        base: base.name.clone(),
        n,
        m,
        k_bound: kb,
        d2_bound,
        d3_bound,
        solutions,
        family_identity: family_identity(n, m),
        envelope_ok: members_inside && by_root == scanned_pairs,
    }
}

/// `216·n·(7nmk³)² + 49·m²·(−6nk²)³` as a polynomial in `k`; must vanish.
pub fn family_identity(n: i64, m: i64) -> bool {
    let k = MultiPoly::var("k");
    let d2 = MultiPoly::from(-6 * n) * k.pow(2);
    let d3 = MultiPoly::from(7 * n * m) * k.pow(3);
    (MultiPoly::from(216 * n) * d3.pow(2) + MultiPoly::from(49 * m * m) * d2.pow(3)).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionVerdict {
    pub tau: Rational,
    /// `(−K+τH)^6·H`.
    pub degree6: Rational,
    /// `(−K+τH)^5·H^2`.
    pub degree5: Rational,
    pub pass: bool,
}

/// Image dimension is exactly 5: the degree-6 number vanishes, the degree-5 one does not.
pub fn dimension_check_at(bundle: &BundleData, tau: &Rational) -> Result<DimensionVerdict> {
    let ring = ProjBundleRing::new(bundle.clone());
    let degree6 = anticanonical_power_degree(&ring, tau, 6)?;
    let degree5 = anticanonical_power_degree(&ring, tau, 5)?;
    let pass = degree6.is_zero() && !degree5.is_zero();
    Ok(DimensionVerdict {
        tau: tau.clone(),
        degree6,
        degree5,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateBundle {
    pub base: Arc<CyclicChowRing>,
    pub k: i64,
    pub tau: Rational,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    /// `a = −6k²`, `b = 7k³` recomputed from the Chern data.
    pub forward_check: bool,
    pub index_bound: bool,
    pub dimension: DimensionVerdict,
}

impl CandidateBundle {
    pub fn bundle(&self) -> BundleData {
        BundleData::from_generator_units(&self.base, 3, &[self.c1, self.c2, self.c3])
            .expect("candidate Chern data is integral")
    }

    pub fn label(&self) -> String {
        format!("({};{},{},{})", self.base.name, self.c1, self.c2, self.c3)
    }
}

fn window(k: i64) -> std::ops::RangeInclusive<i64> {
    (3 * k - 2)..=(3 * k)
}

fn solve_chern(base: &CyclicChowRing, k: i64, c1: i64) -> Option<(i64, i64)> {
    let (n, m) = (int(base.n), int(base.m));
    let c1r = int(c1);
    let kr = int(k);
    let c2 = &n * (int(3) * &c1r * &c1r + int(6) * &kr * &kr) / int(9);
    let c3 = &n * &m * (int(7) * kr.pow(3) - int(2) * c1r.pow(3) + int(9) * &c1r * &c2 / &n) / int(27);
    Some((as_i64(&c2)?, as_i64(&c3)?))
}

/// Integral `(c1, c2, c3)` with `a = −6k²`, `b = 7k³` for `c1` in the
/// normalized window `3k−2 ≤ c1 ≤ 3k`; empty unless `0 < 2k < r_Y`.
pub fn recover_chern(base: &Arc<CyclicChowRing>, k: i64) -> Result<Vec<CandidateBundle>> {
    if k <= 0 || 2 * k >= base.fano_index {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for c1 in window(k) {
        let Some((c2, c3)) = solve_chern(base, k, c1) else {
            continue;
        };
        let bundle = BundleData::from_generator_units(base, 3, &[c1, c2, c3])?;
        let d = d_series(&bundle, 3);
        let forward_check = d.h_coeff(2) == int(-6 * k * k) && d.h_coeff(3) == int(7 * k * k * k);
        let tau = int(2 * k);
        let dimension = dimension_check_at(&bundle, &tau)?;
        out.push(CandidateBundle {
            base: Arc::clone(base),
            k,
            tau,
            c1,
            c2,
            c3,
            forward_check,
            index_bound: true,
            dimension,
        });
    }
    Ok(out)
}

/// The change of basis between the two natural bases of `A³(X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularityMatrix {
    pub entries: [[Rational; 3]; 3],
}

impl UnimodularityMatrix {
    pub fn new(n_y: i64, n_z: i64, m_z: i64, c1: i64, c2: i64, c3: i64) -> Self {
        let q = n_z * m_z;
        UnimodularityMatrix {
            entries: [
                [int(0), int(n_y), int(0)],
                [int(n_z), int(0), int(0)],
                [rat(c1, q), rat(-c2, q), rat(c3, q)],
            ],
        }
    }

    pub fn determinant(&self) -> Rational {
        let e = &self.entries;
        &e[0][0] * (&e[1][1] * &e[2][2] - &e[1][2] * &e[2][1])
            - &e[0][1] * (&e[1][0] * &e[2][2] - &e[1][2] * &e[2][0])
            + &e[0][2] * (&e[1][0] * &e[2][1] - &e[1][1] * &e[2][0])
    }

    /// `(row, column)` of every non-integral entry.
    pub fn non_integral_entries(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_integer() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnimodularityVerdict {
    pub z: String,
    pub matrix: UnimodularityMatrix,
    pub determinant: Rational,
    pub non_integral: Vec<(usize, usize)>,
    pub pass: bool,
}

pub fn unimodularity_filter(candidate: &CandidateBundle, z: &CyclicChowRing) -> UnimodularityVerdict {
    let matrix = UnimodularityMatrix::new(candidate.base.n, z.n, z.m, candidate.c1, candidate.c2, candidate.c3);
    let determinant = matrix.determinant();
    let non_integral = matrix.non_integral_entries();
    let pass = non_integral.is_empty() && determinant.abs().is_one();
    UnimodularityVerdict {
        z: z.name.clone(),
        matrix,
        determinant,
        non_integral,
        pass,
    }
}

/// External facts the pipeline records but cannot compute.
pub fn external_exclusion(candidate: &CandidateBundle, z: &CyclicChowRing) -> Option<&'static str> {
    let hit = candidate.base.name == "P5" && z.name == "P5" && (candidate.c1, candidate.c2, candidate.c3) == (2, 2, 1);
    hit.then_some(SAT85)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict {
    /// Index into [`ClassificationReport::candidates`].
    pub candidate: usize,
    pub unimodularity: UnimodularityVerdict,
    pub external_exclusion: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiStage {
    pub base: String,
    pub total: Vec<u64>,
    pub result: BaseBetti,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Survivor {
    /// `τ = 0`: `X ≅ P² × Y`.
    Product,
    Pair { candidate: usize, z: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineOptions {
    pub k_bound: i64,
    pub external_exclusions: bool,
    pub exec: Execution,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            k_bound: 2,
            external_exclusions: true,
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub dim: usize,
    pub rho: usize,
    pub options: PipelineOptions,
    pub betti: Vec<BettiStage>,
    pub quartic: QuarticCheck,
    pub diophantine: Vec<DiophantineReport>,
    pub candidates: Vec<CandidateBundle>,
    pub pairs: Vec<PairVerdict>,
    pub survivors: Vec<Survivor>,
}

impl ClassificationReport {
    pub fn nontrivial_survivors(&self) -> Vec<(&CandidateBundle, &str)> {
        self.survivors
            .iter()
            .filter_map(|s| match s {
                Survivor::Pair { candidate, z } => Some((&self.candidates[*candidate], z.as_str())),
                Survivor::Product => None,
            })
            .collect()
    }
}

fn registry_position(name: &str) -> usize {
    CyclicChowRing::registry_names()
        .iter()
        .position(|n| *n == name)
        .unwrap_or(usize::MAX)
}

/// The full enumeration for 7-folds of Picard number 2.
pub fn run_pipeline(dim: usize, rho: usize, options: PipelineOptions) -> Result<ClassificationReport> {
    if (dim, rho) != (7, 2) {
        return Err(crate::Error::Domain(format!(
            "only (dim, rho) = (7, 2) is implemented, got ({dim}, {rho})"
        )));
    }
    let bases: Vec<Arc<CyclicChowRing>> = CyclicChowRing::five_folds().into_iter().map(Arc::new).collect();

    let mut betti = Vec::new();
    for y in &bases {
        let total = betti_of_fibration(&y.betti_even, 2, FiberKind::ProjectiveSpace)?;
        let result = solve_base_betti(&total, 1)?;
        betti.push(BettiStage {
            base: y.name.clone(),
            total,
            result,
        });
    }

    let diophantine: Vec<DiophantineReport> = if options.k_bound >= 1 {
        bases
            .iter()
            .map(|y| solve_diophantine(y, options.k_bound, options.exec))
            .collect()
    } else {
        Vec::new()
    };

    let tuples: Vec<(Arc<CyclicChowRing>, i64)> = diophantine
        .iter()
        .zip(&bases)
        .flat_map(|(rep, y)| rep.positive_ks().into_iter().map(move |k| (Arc::clone(y), k)))
        .collect();
    let recovered = options.exec.map(tuples, |(y, k)| recover_chern(&y, k));
    let mut candidates = Vec::new();
    for r in recovered {
        candidates.extend(r?);
    }
    candidates.retain(|c| c.forward_check && c.dimension.pass);
    candidates.sort_by_key(|c| (registry_position(&c.base.name), c.k, c.c1));

    let mut pairs = Vec::new();
    let mut survivors = vec![Survivor::Product];
    for (i, c) in candidates.iter().enumerate() {
        for z in &bases {
            let unimodularity = unimodularity_filter(c, z);
            let external = if options.external_exclusions {
                external_exclusion(c, z)
            } else {
                None
            };
            if unimodularity.pass && external.is_none() {
                survivors.push(Survivor::Pair {
                    candidate: i,
                    z: z.name.clone(),
                });
            }
            pairs.push(PairVerdict {
                candidate: i,
                unimodularity,
                external_exclusion: external,
            });
        }
    }

    Ok(ClassificationReport {
        dim,
        rho,
        options,
        betti,
        quartic: quartic_factor_check(),
        diophantine,
        candidates,
        pairs,
        survivors,
    })
}

/// Intersection profiles of `P(S*)` for the rank-4 bundle `(Q5; 2,2,2,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinorReport {
    /// `(−K+2H)^i·H^{8−i}` for `i = 0..=8`.
    pub profile_tau2: Vec<Rational>,
    /// `(−K)^i·H^{8−i}` for `i = 0..=8`.
    pub profile_tau0: Vec<Rational>,
    pub pass: bool,
}

impl SpinorReport {
    /// Degrees `i` where the `τ = 0` profile differs from that of a product,
    /// which is nonzero only at `i = r − 1`.
    pub fn non_product_witnesses(&self) -> Vec<usize> {
        (0..self.profile_tau0.len())
            .filter(|&i| i != 3 && !self.profile_tau0[i].is_zero())
            .collect()
    }
}

pub fn spinor_consistency_check() -> Result<SpinorReport> {
    let q5 = Arc::new(CyclicChowRing::q5());
    let bundle = BundleData::from_generator_units(&q5, 4, &[2, 2, 2, 0])?;
    let ring = ProjBundleRing::new(bundle);
    let profile_tau2: Vec<Rational> = (0..=8)
        .map(|i| anticanonical_power_degree(&ring, &int(2), i))
        .collect::<Result<_>>()?;
    let profile_tau0: Vec<Rational> = (0..=8)
        .map(|i| anticanonical_power_degree(&ring, &int(0), i))
        .collect::<Result<_>>()?;
    let mut report = SpinorReport {
        profile_tau2,
        profile_tau0,
        pass: false,
    };
    report.pass = report.profile_tau2[8].is_zero()
        && report.profile_tau2[7].is_zero()
        && !report.profile_tau2[6].is_zero()
        && !report.non_product_witnesses().is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(name: &str) -> Arc<CyclicChowRing> {
        Arc::new(CyclicChowRing::by_name(name).unwrap())
    }

    fn triples(cs: &[CandidateBundle]) -> Vec<(i64, i64, i64)> {
        cs.iter().map(|c| (c.c1, c.c2, c.c3)).collect()
    }

    #[test]
    fn diophantine_on_q5() {
        let rep = solve_diophantine(&ring("Q5"), 2, Execution::Sequential);
        let pairs: Vec<(i64, i64)> = rep.solutions.iter().map(|s| (s.d2, s.d3)).collect();
        assert_eq!(pairs, vec![(-24, -112), (-24, 112), (-6, -14), (-6, 14)]);
        let ks: Vec<Option<i64>> = rep.solutions.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![Some(-2), Some(2), Some(-1), Some(1)]);
        assert!(rep.all_on_family());
        assert!(rep.family_identity);
        assert!(rep.envelope_ok);
        assert_eq!(rep.positive_ks(), vec![1, 2]);
    }

    #[test]
    fn diophantine_wide_box_oracle() {
        // plain double loop over a generous box
        for y in CyclicChowRing::five_folds() {
            let (n, m) = (y.n, y.m);
            let rep = solve_diophantine(&y, 2, Execution::Parallel);
            let mut brute = Vec::new();
            for d2 in -rep.d2_bound..=rep.d2_bound {
                for d3 in -rep.d3_bound..=rep.d3_bound {
                    if (d2, d3) != (0, 0) && 216 * n * d3 * d3 + 49 * m * m * d2 * d2 * d2 == 0 {
                        brute.push((d2, d3));
                    }
                }
            }
            let found: Vec<(i64, i64)> = rep.solutions.iter().map(|s| (s.d2, s.d3)).collect();
            assert_eq!(found, brute, "{}", y.name);
        }
    }

    #[test]
    fn chern_recovery_rows() {
        assert_eq!(triples(&recover_chern(&ring("Q5"), 1).unwrap()), vec![(2, 2, 2)]);
        assert_eq!(triples(&recover_chern(&ring("Q5"), 2).unwrap()), vec![(4, 8, 16)]);
        assert_eq!(triples(&recover_chern(&ring("P5"), 1).unwrap()), vec![(2, 2, 1)]);
        assert_eq!(triples(&recover_chern(&ring("P5"), 2).unwrap()), vec![(4, 8, 8)]);
        assert_eq!(triples(&recover_chern(&ring("KG2"), 1).unwrap()), vec![(2, 6, 6)]);
        assert!(recover_chern(&ring("KG2"), 2).unwrap().is_empty());
        assert!(recover_chern(&ring("Q5"), 3).unwrap().is_empty());
    }

    #[test]
    fn unimodularity_examples() {
        let q = &recover_chern(&ring("Q5"), 1).unwrap()[0];
        let v = unimodularity_filter(q, &CyclicChowRing::q5());
        assert_eq!(v.determinant, int(-1));
        assert!(v.pass);
        let q2 = &recover_chern(&ring("Q5"), 2).unwrap()[0];
        let v2 = unimodularity_filter(q2, &CyclicChowRing::q5());
        assert_eq!(v2.determinant, int(-8));
        assert!(!v2.pass);
        let kg = &recover_chern(&ring("KG2"), 1).unwrap()[0];
        let v3 = unimodularity_filter(kg, &CyclicChowRing::kg2());
        assert!(!v3.non_integral.is_empty());
    }

    #[test]
    fn determinant_closed_form() {
        for (ny, nz, mz, c1, c2, c3) in [(1, 1, 2, 2, 2, 2), (3, 3, 2, 2, 6, 6), (1, 1, 1, 4, 8, 8), (3, 1, 2, 5, -7, 11)] {
            let m = UnimodularityMatrix::new(ny, nz, mz, c1, c2, c3);
            assert_eq!(m.determinant(), rat(-ny * c3, mz));
        }
    }

    #[test]
    fn dimension_checks() {
        let p5 = &recover_chern(&ring("P5"), 2).unwrap()[0];
        assert!(p5.dimension.pass);
        let off = dimension_check_at(&p5.bundle(), &int(3)).unwrap();
        assert!(!off.degree6.is_zero());
        assert!(!off.pass);
    }

    #[test]
    fn nonvanishing_scales_with_k_cubed() {
        for (name, k) in [("Q5", 1), ("Q5", 2), ("P5", 1), ("P5", 2), ("KG2", 1)] {
            let y = ring(name);
            let c = &recover_chern(&y, k).unwrap()[0];
            assert_eq!(c.dimension.degree5, int(FIVE_FOLD_NONVANISHING * y.d * k * k * k));
        }
    }

    #[test]
    fn pipeline_survivors() {
        let rep = run_pipeline(7, 2, PipelineOptions::default()).unwrap();
        assert_eq!(rep.candidates.len(), 5);
        let surv: Vec<(String, &str)> = rep.nontrivial_survivors().iter().map(|(c, z)| (c.label(), *z)).collect();
        assert_eq!(surv, vec![("(Q5;2,2,2)".to_string(), "Q5")]);
        assert_eq!(rep.survivors[0], Survivor::Product);
        assert!(rep.betti.iter().all(|b| !b.result.is_feasible()));

        let open = run_pipeline(7, 2, PipelineOptions { external_exclusions: false, ..Default::default() }).unwrap();
        assert_eq!(open.nontrivial_survivors().len(), 2);

        let none = run_pipeline(7, 2, PipelineOptions { k_bound: 0, ..Default::default() }).unwrap();
        assert_eq!(none.survivors, vec![Survivor::Product]);
        assert!(run_pipeline(6, 2, PipelineOptions::default()).is_err());
    }

    #[test]
    fn pipeline_is_execution_independent() {
        let seq = run_pipeline(7, 2, PipelineOptions { exec: Execution::Sequential, ..Default::default() }).unwrap();
        let par = run_pipeline(7, 2, PipelineOptions { exec: Execution::Parallel, ..Default::default() }).unwrap();
        assert_eq!(seq.candidates, par.candidates);
        assert_eq!(seq.pairs, par.pairs);
        assert_eq!(seq.survivors, par.survivors);
    }

    #[test]
    fn spinor_profile() {
        let rep = spinor_consistency_check().unwrap();
        let tau2: Vec<i64> = rep.profile_tau2.iter().map(|x| as_i64(x).unwrap()).collect();
        let tau0: Vec<i64> = rep.profile_tau0.iter().map(|x| as_i64(x).unwrap()).collect();
        assert_eq!(tau2, [0, 0, 0, 128, 1024, 4096, 8192, 0, 0]);
        assert_eq!(tau0, [0, 0, 0, 128, 0, -1024, 0, 14336, 0]);
        assert_eq!(rep.non_product_witnesses(), vec![5, 7]);
        assert!(rep.pass);
    }
}
