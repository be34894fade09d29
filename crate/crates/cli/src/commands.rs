use std::sync::Arc;

use chowcalc::chow::{ChowClass, CyclicChowRing};
use chowcalc::classes::{d_series, delta_series, segre_from_chern, BundleData};
use chowcalc::classify::{run_pipeline, PipelineOptions, Survivor, SAT85};
use chowcalc::exactalg::format_rational;
use chowcalc::projbundle::{anticanonical_power_degree, ProjBundleRing};
use chowcalc::slopes::{build_numeric_slope_system, build_slope_system, resultant_condition, resultant_quotient};
use chowcalc::verify::{run_checks, VerifyOptions};
use chowcalc::{Error, Rational};

use crate::report::{Report, Section};

/// Why a command did not produce a clean report.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownBase(_)
            | Error::DimensionMismatch(_)
            | Error::Domain(_)
            | Error::UndefinedGenerator(_)
            | Error::NotPure(_)
            | Error::UnsupportedRank(..)
            | Error::DegreeZero(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

pub type Outcome = Result<Report, Failure>;

fn q(x: &Rational) -> String {
    format_rational(x)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn ring(name: &str) -> Result<Arc<CyclicChowRing>, Failure> {
    Ok(Arc::new(CyclicChowRing::by_name(name)?))
}

fn bundle(base: &Arc<CyclicChowRing>, rank: usize, chern: &[i64]) -> Result<BundleData, Failure> {
    if chern.len() != rank {
        return Err(Failure::Usage(format!(
            "rank {rank} needs {rank} Chern classes, got {}",
            chern.len()
        )));
    }
    Ok(BundleData::from_generator_units(base, rank, chern)?)
}

fn units(x: &ChowClass, codim: usize) -> String {
    match x.in_generator_units(codim) {
        Ok(u) => q(&u),
        Err(_) => "-".to_string(),
    }
}

pub fn d_classes(base: &str, rank: usize, chern: &[i64], max: usize) -> Outcome {
    let y = ring(base)?;
    let b = bundle(&y, rank, chern)?;
    let mut r = Report::new("d-classes");
    r.input("base", base);
    r.input("rank", rank);
    r.input("chern", join(chern));
    r.input("max", max);
    let s = segre_from_chern(&b, max);
    let d = d_series(&b, max);
    let delta = delta_series(&b, max);
    let mut t = Section::new(
        "classes (H-coefficients; generator units)",
        &["i", "s_i", "d_i", "Delta_i", "s_i units", "d_i units", "Delta_i units"],
    );
    for i in 0..=max {
        let (si, di, ei) = (s.get(i), d.get(i), delta.get(i));
        t.push(vec![
            i.to_string(),
            q(&si.coeff(i.min(y.dim))),
            q(&di.coeff(i.min(y.dim))),
            q(&ei.coeff(i.min(y.dim))),
            units(&si, i),
            units(&di, i),
            units(&ei, i),
        ]);
    }
    r.results.push(t);
    Ok(r)
}

pub fn intersect(base: &str, rank: usize, chern: &[i64], tau: &Rational, power: usize, hpower: usize) -> Outcome {
    let y = ring(base)?;
    let b = bundle(&y, rank, chern)?;
    let n = y.dim + rank - 1;
    if power + hpower != n {
        return Err(Failure::Usage(format!(
            "power {power} + hpower {hpower} must equal dim P(E) = {n}"
        )));
    }
    let value = anticanonical_power_degree(&ProjBundleRing::new(b), tau, power)?;
    let mut r = Report::new("intersect");
    r.input("base", base);
    r.input("rank", rank);
    r.input("chern", join(chern));
    r.input("tau", q(tau));
    r.input("power", power);
    r.input("hpower", hpower);
    let mut t = Section::new("intersection", &["expression", "value"]);
    t.push(vec![format!("(-K + {}H)^{power} . H^{hpower}", q(tau)), q(&value)]);
    r.results.push(t);
    r.check("dual-path", "pass", "ring expansion and d-class formula agree");
    Ok(r)
}

pub fn slope_system(base: &str, rank: usize, dim_bound: usize, chern: Option<&[i64]>) -> Outcome {
    let y = ring(base)?;
    let sys = match chern {
        Some(c) => build_numeric_slope_system(&bundle(&y, rank, c)?, dim_bound)?,
        None => build_slope_system(&y, rank, dim_bound)?,
    };
    let mut r = Report::new("slope-system");
    r.input("base", base);
    r.input("rank", rank);
    r.input("dim-bound", dim_bound);
    r.input("chern", chern.map_or_else(|| "symbolic".to_string(), join));
    let mut t = Section::new("conditions", &["i", "polynomial"]);
    for (i, p) in &sys.polys {
        t.push(vec![i.to_string(), p.to_string()]);
    }
    r.results.push(t);
    Ok(r)
}

pub fn resultant(base: &str, rank: usize, dim_bound: usize, at: Option<(Rational, Rational)>) -> Outcome {
    let y = ring(base)?;
    let sys = build_slope_system(&y, rank, dim_bound)?;
    let res = resultant_condition(&sys)?;
    let mut r = Report::new("resultant");
    r.input("base", base);
    r.input("rank", rank);
    r.input("dim-bound", dim_bound);
    let mut t = Section::new("resultant", &["quantity", "value"]);
    t.push(vec!["res_tau(f, g)".into(), res.to_string()]);
    match resultant_quotient(&res) {
        Ok(c) => {
            t.push(vec!["constant over the three factors".into(), q(&c)]);
            r.check("factorization", "pass", "exact division by a, 216b^2+49a^3 and the quartic factor");
        }
        Err(e) => r.check("factorization", "fail", e.to_string()),
    }
    if let Some((a, b)) = at {
        r.input("a", q(&a));
        r.input("b", q(&b));
        let v = res.eval_all(&[("a", a), ("b", b)])?;
        t.push(vec!["specialized value".into(), q(&v)]);
    }
    r.results.push(t);
    Ok(r)
}

pub fn enumerate(dim: usize, rho: usize, options: PipelineOptions) -> Outcome {
    let rep = run_pipeline(dim, rho, options)?;
    let mut r = Report::new("enumerate");
    r.input("dim", dim);
    r.input("rho", rho);
    r.input("k-bound", options.k_bound);
    r.input("external-exclusions", if options.external_exclusions { "on" } else { "off" });

    let mut betti = Section::new("betti: dim Z = 6 via a P^1-fibration", &["Y", "b(X)", "b(Z)", "verdict"]);
    for s in &rep.betti {
        let (solved, verdict) = match &s.result {
            chowcalc::chow::BaseBetti::Feasible(v) => (join(v), "feasible".to_string()),
            chowcalc::chow::BaseBetti::Infeasible { solved, violation } => (join(solved), violation.to_string()),
        };
        betti.push(vec![s.base.clone(), join(&s.total), solved, verdict]);
    }
    r.results.push(betti);

    let mut dio = Section::new(
        "diophantine: 216 n d3^2 + 49 m^2 d2^3 = 0",
        &["Y", "n", "m", "|d2| <=", "|d3| <=", "solutions (d2,d3,k)", "complete"],
    );
    for d in &rep.diophantine {
        let sols: Vec<String> = d
            .solutions
            .iter()
            .map(|s| format!("({},{},{})", s.d2, s.d3, s.k.map_or("-".to_string(), |k| k.to_string())))
            .collect();
        let complete = d.family_identity && d.envelope_ok && d.all_on_family();
        dio.push(vec![
            d.base.clone(),
            d.n.to_string(),
            d.m.to_string(),
            d.d2_bound.to_string(),
            d.d3_bound.to_string(),
            sols.join(" "),
            complete.to_string(),
        ]);
    }
    r.results.push(dio);

    let mut cands = Section::new(
        "candidates",
        &["#", "Y", "k", "tau", "c1", "c2", "c3", "(-K+tH)^6.H", "(-K+tH)^5.H^2"],
    );
    for (i, c) in rep.candidates.iter().enumerate() {
        cands.push(vec![
            i.to_string(),
            c.base.name.clone(),
            c.k.to_string(),
            q(&c.tau),
            c.c1.to_string(),
            c.c2.to_string(),
            c.c3.to_string(),
            q(&c.dimension.degree6),
            q(&c.dimension.degree5),
        ]);
    }
    r.results.push(cands);

    let mut uni = Section::new(
        "unimodularity",
        &["candidate", "Z", "det", "non-integral entries", "unimodular", "external"],
    );
    for p in &rep.pairs {
        let c = &rep.candidates[p.candidate];
        let bad: Vec<String> = p
            .unimodularity
            .non_integral
            .iter()
            .map(|(i, j)| format!("({},{})={}", i + 1, j + 1, q(&p.unimodularity.matrix.entries[*i][*j])))
            .collect();
        uni.push(vec![
            c.label(),
            p.unimodularity.z.clone(),
            q(&p.unimodularity.determinant),
            if bad.is_empty() { "-".into() } else { bad.join(" ") },
            p.unimodularity.pass.to_string(),
            p.external_exclusion.unwrap_or("-").to_string(),
        ]);
    }
    r.results.push(uni);

    let mut surv = Section::new("survivors", &["kind", "X"]);
    for s in &rep.survivors {
        match s {
            Survivor::Product => surv.push(vec!["product (tau = 0)".into(), "P^2 x Y".into()]),
            Survivor::Pair { candidate, z } => {
                let c = &rep.candidates[*candidate];
                surv.push(vec!["nontrivial".into(), format!("P({}) with Z = {z}", c.label())]);
            }
        }
    }
    r.results.push(surv);

    let status = |b: bool| if b { "pass" } else { "fail" };
    r.check(
        "quartic-factor",
        status(rep.quartic.excludes_rational_points()),
        format!("discriminant {} admits no rational b", rep.quartic.discriminant),
    );
    r.check(
        "diophantine-completeness",
        status(rep.diophantine.iter().all(|d| d.family_identity && d.envelope_ok && d.all_on_family())),
        "every solution in the box lies on d2 = -6nk^2, d3 = 7nmk^3",
    );
    if options.external_exclusions {
        r.check(SAT85, "assumed-external", "(P5;2,2,1) with Z = P5 does not occur");
    }
    Ok(r)
}

pub fn verify_paper(options: VerifyOptions) -> Outcome {
    let rep = run_checks(&options);
    let mut r = Report::new("verify-paper");
    r.input("seed", options.seed);
    r.input("samples", options.samples);
    r.input("k-bound", options.k_bound);
    for c in &rep.checks {
        r.check(c.name, c.status.as_str(), c.detail.clone());
    }
    Ok(r)
}
