//! Sequential vs parallel execution of the main kernels.

use std::sync::Arc;

use chowcalc::chow::CyclicChowRing;
use chowcalc::classify::{run_pipeline, solve_diophantine, PipelineOptions};
use chowcalc::projbundle::{anticanonical_power_by_d_classes, anticanonical_power_by_expansion, ProjBundleRing};
use chowcalc::slopes::{build_slope_system, resultant_condition_with};
use chowcalc::verify::random_corpus;
use chowcalc::Execution;
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn resultant(c: &mut Criterion) {
    let sys = build_slope_system(&Arc::new(CyclicChowRing::q5()), 3, 5).unwrap();
    let mut g = c.benchmark_group("bareiss_resultant");
    for (name, exec) in MODES {
        g.bench_function(name, |b| b.iter(|| resultant_condition_with(black_box(&sys), exec).unwrap()));
    }
    g.finish();
}

fn diophantine(c: &mut Criterion) {
    let mut g = c.benchmark_group("diophantine_search");
    for k_bound in [2i64, 6] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, k_bound), &k_bound, |b, &k| {
                b.iter(|| solve_diophantine(&CyclicChowRing::kg2(), k, exec))
            });
        }
    }
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(20);
    for (name, exec) in MODES {
        let opts = PipelineOptions {
            exec,
            ..PipelineOptions::default()
        };
        g.bench_function(name, |b| b.iter(|| run_pipeline(7, 2, opts).unwrap()));
    }
    g.finish();
}

fn dual_path(c: &mut Criterion) {
    let corpus = random_corpus(0x5eed, 48);
    let mut g = c.benchmark_group("corpus_dual_path");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| {
                exec.map(corpus.clone(), |s| {
                    let ring = ProjBundleRing::new(s.bundle.clone());
                    (0..=ring.total_dim())
                        .all(|i| {
                            anticanonical_power_by_expansion(&ring, &s.tau, i).unwrap()
                                == anticanonical_power_by_d_classes(&s.bundle, &s.tau, i).unwrap()
                        })
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, resultant, diophantine, pipeline, dual_path);
criterion_main!(benches);
