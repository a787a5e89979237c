use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use shoda_bench::{configurations, workloads};
use shoda_core::{ext_strong_shoda_pairs, search};

fn strong_shoda_pairs(c: &mut Criterion) {
    let mut group = c.benchmark_group("strong_shoda_pairs");
    group.sample_size(20);
    for (name, g) in workloads() {
        for (label, strategy, opts) in configurations() {
            group.bench_with_input(BenchmarkId::new(label, &name), &g, |b, g| {
                b.iter(|| search(black_box(g), strategy, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn extremely_strong_only(c: &mut Criterion) {
    let mut group = c.benchmark_group("ext_strong_shoda_pairs");
    for (name, g) in workloads() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &g, |b, g| {
            b.iter(|| ext_strong_shoda_pairs(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, strong_shoda_pairs, extremely_strong_only);
criterion_main!(benches);
