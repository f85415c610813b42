use std::hint::black_box;

use bdtw_bench::{instance, mss_values};
use bdtw_core::{
    block_profile, dtw_all_condensed, dtw_sq_blocks, dtw_sq_dp, mean_baseline, mean_fast,
    mss_solve, MssInstance,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn dtw(c: &mut Criterion) {
    let mut group = c.benchmark_group("dtw");
    for n in [100, 1_000, 4_000] {
        let pair = instance(2, n, 0.1, 7);
        let (px, py) = (block_profile(&pair[0]), block_profile(&pair[1]));
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::new("dp", n), &pair, |b, p| {
            b.iter(|| dtw_sq_dp(black_box(&p[0]), black_box(&p[1]), false))
        });
        group.bench_with_input(BenchmarkId::new("blocks", n), &(px, py), |b, (x, y)| {
            b.iter(|| dtw_sq_blocks(black_box(x), black_box(y)))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("dtw_all_condensed");
    for n in [1_000, 10_000] {
        let p = block_profile(&instance(1, n, 0.1, 3)[0]);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| dtw_all_condensed(black_box(p), 1))
        });
    }
    group.finish();
}

fn mean(c: &mut Criterion) {
    let mut group = c.benchmark_group("mean");
    group.sample_size(10);
    for n in [250, 1_000, 2_000] {
        let strings = instance(10, n, 0.1, 11);
        group.bench_with_input(BenchmarkId::new("fast", n), &strings, |b, s| {
            b.iter(|| mean_fast(black_box(s)))
        });
        group.bench_with_input(BenchmarkId::new("baseline", n), &strings, |b, s| {
            b.iter(|| mean_baseline(black_box(s)))
        });
    }
    let strings = instance(10, 10_000, 0.1, 11);
    group.bench_with_input(BenchmarkId::new("fast", 10_000), &strings, |b, s| {
        b.iter(|| mean_fast(black_box(s)))
    });
    group.finish();
}

fn mss(c: &mut Criterion) {
    let mut group = c.benchmark_group("mss");
    for m in [100, 1_000] {
        let inst = MssInstance::new(mss_values(m, 5), m / 4).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &inst, |b, inst| {
            b.iter(|| mss_solve(black_box(inst)))
        });
    }
    group.finish();
}

criterion_group!(benches, dtw, mean, mss);
criterion_main!(benches);
