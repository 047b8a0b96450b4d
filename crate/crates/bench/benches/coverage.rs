use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sidonset_bench::pool;
use sidonset_core::ruzsa::QuotientBase;
use sidonset_core::{build_bch, construct_with_base, RuzsaParams};

fn sidon_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_sidon");
    for m in [14u32, 18, 22] {
        let set = build_bch(m).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &set, |b, s| {
            b.iter(|| black_box(s.check_sidon().is_ok()))
        });
    }
    group.finish();
}

fn profile(c: &mut Criterion) {
    let mut group = c.benchmark_group("cover_profile");
    group.sample_size(10);
    for m in [14u32, 18] {
        let set = build_bch(m).unwrap();
        for threads in [1usize, 4] {
            let workers = pool(threads);
            group.bench_with_input(BenchmarkId::new(format!("m{m}"), threads), &set, |b, s| {
                b.iter(|| workers.install(|| black_box(s.cover_profile().total())))
            });
        }
    }
    group.finish();
}

fn bitmap(c: &mut Criterion) {
    let mut group = c.benchmark_group("covered_bitmap");
    group.sample_size(10);
    for m in [18u32, 20] {
        let set = build_bch(m).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(m), &set, |b, s| {
            b.iter(|| black_box(s.covered_bitmap().count_ones(..)))
        });
    }
    group.finish();
}

fn construct(c: &mut Criterion) {
    let base = QuotientBase::new(18).unwrap();
    let mut group = c.benchmark_group("construct");
    group.sample_size(10);
    group.bench_function("n20", |b| {
        let mut seed = 0;
        b.iter(|| {
            seed += 1;
            let r = construct_with_base(&RuzsaParams::new(20).with_seed(seed), &base).unwrap();
            black_box(r.size_s)
        })
    });
    group.finish();
}

criterion_group!(benches, sidon_check, profile, bitmap, construct);
criterion_main!(benches);
