//! Census throughput, one worker against the full pool, plus per-method decider cost.
//!
//! `cargo bench -p ads-core --no-default-features` benches the sequential build.

use std::hint::black_box;
use std::time::Duration;

use ads_core::ads::{is_ads, AdsMethod};
use ads_core::catalog::Catalog;
use ads_core::census::{census, Mutant, Property};
use ads_core::{par, Guards};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn census_jobs(c: &mut Criterion) {
    let g = Guards::default();
    let entries = Catalog::load("default").unwrap().entries(32).unwrap();
    let props = Property::parse_list("ads,c1,c3,quasi-continuous").unwrap();
    let mut group = c.benchmark_group(format!(
        "census-bound-32-{}",
        if par::is_parallel() {
            "rayon"
        } else {
            "sequential"
        }
    ));
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(20));
    for jobs in [1, 0] {
        let label = if jobs == 1 { "one-worker" } else { "all-cores" };
        group.bench_with_input(BenchmarkId::from_parameter(label), &jobs, |b, &jobs| {
            b.iter(|| census(black_box(&entries), &props, &g, jobs, Mutant::default()).unwrap())
        });
    }
    group.finish();
}

fn methods(c: &mut Criterion) {
    let g = Guards::default();
    let cat = Catalog::load("default").unwrap();
    let mut group = c.benchmark_group("ads-method");
    group.sample_size(10);
    for id in ["zmod8:Z2+Z8", "local-f2xy:regular", "ut2-f2:regular"] {
        let m = cat.find(id).unwrap().module;
        for method in AdsMethod::ALL {
            group.bench_with_input(BenchmarkId::new(method.tag(), id), &m, |b, m| {
                b.iter(|| is_ads(black_box(m), method, &g).unwrap().verdict)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, census_jobs, methods);
criterion_main!(benches);
