use std::sync::Arc;

use chowcalc::chow::{ChowClass, CyclicChowRing};
use chowcalc::classes::{chern_from_segre, delta_closed_form, delta_series, segre_from_chern, BundleData};
use chowcalc::classify::UnimodularityMatrix;
use chowcalc::exactalg::{exact_divide, int, rat, sylvester_resultant, Division, UniPoly};
use chowcalc::projbundle::{anticanonical_power_by_d_classes, anticanonical_power_by_expansion, ProjBundleRing};
use chowcalc::slopes::{build_slope_system, TAU};
use chowcalc::{MultiPoly, Rational};
use num_traits::Zero;
use proptest::prelude::*;

const VARS: [&str; 3] = ["x", "y", "z"];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((small_rational(), prop::collection::vec(0u32..3, 3)), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(), |acc, (c, e)| {
            let mono = VARS.iter().zip(&e).fold(MultiPoly::constant(c), |m, (v, k)| m * MultiPoly::var(v).pow(*k));
            acc + mono
        })
    })
}

fn base() -> impl Strategy<Value = Arc<CyclicChowRing>> {
    prop::sample::select(CyclicChowRing::registry_names().to_vec())
        .prop_map(|n| Arc::new(CyclicChowRing::by_name(n).unwrap()))
}

fn bundle() -> impl Strategy<Value = BundleData> {
    (base(), 1usize..=6).prop_flat_map(|(y, r)| {
        prop::collection::vec(-4i64..=4, r)
            .prop_map(move |cs| BundleData::from_h_multiples(&y, r, &cs.into_iter().map(int).collect::<Vec<_>>()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, MultiPoly::zero());
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn division_reconstructs_the_dividend(p in poly(), q in poly(), c in small_rational()) {
        // q has x-degree at most 2, so the leading coefficient in x is c + 7
        let d = MultiPoly::var("x").pow(3).scale(&(c + int(7))) + q;
        match exact_divide(&p, &d, "x").unwrap() {
            Division::Exact(quot) => prop_assert_eq!(&quot * &d, p.clone()),
            Division::Remainder { quotient, remainder } => {
                prop_assert!(remainder.degree_in("x").is_none_or(|e| e < 3));
                prop_assert_eq!(&(&quotient * &d) + &remainder, p.clone());
            }
        }
        let prod = &p * &d;
        prop_assert_eq!(exact_divide(&prod, &d, "x").unwrap().exact(), Some(p));
    }

    #[test]
    fn chern_segre_roundtrip(b in bundle()) {
        let n = b.ring().dim;
        let back = chern_from_segre(&segre_from_chern(&b, n), n);
        for i in 0..=n {
            prop_assert_eq!(back.get(i), b.chern(i));
        }
    }

    #[test]
    fn delta_vanishes_above_rank(b in bundle()) {
        let n = b.ring().dim;
        let delta = delta_series(&b, n);
        for i in 0..=n {
            prop_assert_eq!(delta.get(i), delta_closed_form(&b, i));
            if i > b.rank() {
                prop_assert!(delta.get(i).is_zero());
            }
        }
    }

    #[test]
    fn intersection_paths_agree(b in bundle(), tau in small_rational()) {
        let ring = ProjBundleRing::new(b.clone());
        for i in 0..=ring.total_dim() {
            prop_assert_eq!(
                anticanonical_power_by_expansion(&ring, &tau, i).unwrap(),
                anticanonical_power_by_d_classes(&b, &tau, i).unwrap()
            );
        }
    }

    #[test]
    fn unimodularity_determinant_closed_form(
        n_y in 1i64..=4, n_z in 1i64..=4, m_z in 1i64..=4,
        c1 in -20i64..=20, c2 in -20i64..=20, c3 in -20i64..=20,
    ) {
        let m = UnimodularityMatrix::new(n_y, n_z, m_z, c1, c2, c3);
        prop_assert_eq!(m.determinant(), rat(-n_y * c3, m_z));
        let q = n_z * m_z;
        let integral = [c1, c2, c3].iter().all(|c| c % q == 0);
        prop_assert_eq!(m.non_integral_entries().is_empty(), integral);
    }

    #[test]
    fn generator_units_roundtrip(y in base(), codim in 0usize..=3, k in -9i64..=9) {
        let x = ChowClass::from_generator(&y, codim, int(k)).unwrap();
        prop_assert_eq!(x.in_generator_units(codim).unwrap(), int(k));
    }
}

fn specialized(a: i64, b: i64) -> (MultiPoly, MultiPoly) {
    let sys = build_slope_system(&Arc::new(CyclicChowRing::q5()), 3, 5).unwrap();
    let at = |p: &MultiPoly| p.eval("a", &int(a)).eval("b", &int(b)).compact();
    (at(sys.poly(7).unwrap()), at(sys.poly(6).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// The resultant vanishes exactly when f and g share a root.
    #[test]
    fn resultant_zero_iff_common_root(a in -12i64..=12, b in -12i64..=12) {
        let (f, g) = specialized(a, b);
        let res = sylvester_resultant(&f, &g, TAU).unwrap().constant_value().unwrap();
        let gcd = UniPoly::from_multi(&f, TAU).unwrap().gcd(&UniPoly::from_multi(&g, TAU).unwrap());
        prop_assert_eq!(res.is_zero(), gcd.degree().unwrap_or(0) > 0, "a={} b={} gcd={}", a, b, gcd);
    }
}

#[test]
fn family_gcd_is_linear() {
    for k in (-10i64..=10).filter(|k| *k != 0) {
        let (f, g) = specialized(-6 * k * k, 7 * k * k * k);
        let gcd = UniPoly::from_multi(&f, TAU).unwrap().gcd(&UniPoly::from_multi(&g, TAU).unwrap());
        assert_eq!(gcd, UniPoly::new(vec![int(-2 * k), int(1)]), "k = {k}");
    }
}

#[test]
fn a_zero_lies_on_the_resultant_locus() {
    // a = 0 leaves tau = 0 as a common root for every b
    let (f, g) = specialized(0, 5);
    let res = sylvester_resultant(&f, &g, TAU).unwrap();
    assert_eq!(res.constant_value(), Some(Rational::zero()));
}
