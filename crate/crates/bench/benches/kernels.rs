use adjrank_bench::{corank_one, dense, pencil, poly_with_roots};
use adjrank_core::hurwitz::{build_hr_family, certify_hr};
use adjrank_core::psi::psi;
use adjrank_core::subspace::{pencil_minrank_exact, sturm_real_roots};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn exact(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact");
    for n in [4, 6, 8] {
        let a = dense(n);
        g.bench_with_input(BenchmarkId::new("det", n), &a, |b, a| b.iter(|| black_box(a).det()));
        g.bench_with_input(BenchmarkId::new("rank", n), &a, |b, a| b.iter(|| black_box(a).rank()));
        g.bench_with_input(BenchmarkId::new("cofactor", n), &a, |b, a| b.iter(|| black_box(a).cofactor()));
        let s = corank_one(n);
        g.bench_with_input(BenchmarkId::new("cofactor_corank_one", n), &s, |b, a| {
            b.iter(|| black_box(a).cofactor())
        });
        g.bench_with_input(BenchmarkId::new("psi", n), &s, |b, a| b.iter(|| psi(black_box(a))));
    }
    g.finish();
}

fn subspace(c: &mut Criterion) {
    let mut g = c.benchmark_group("subspace");
    let p = poly_with_roots(&[-3, -1, 0, 2, 5, 7]);
    g.bench_function("sturm_deg8", |b| b.iter(|| sturm_real_roots(black_box(&p))));
    for n in [2, 3, 4] {
        let (a, bm) = pencil(n);
        g.bench_with_input(BenchmarkId::new("pencil_exact", n), &(a, bm), |b, (a, bm)| {
            b.iter(|| pencil_minrank_exact(black_box(a), black_box(bm)))
        });
    }
    g.finish();
}

fn hurwitz(c: &mut Criterion) {
    let mut g = c.benchmark_group("hurwitz");
    g.sample_size(10);
    for n in [8u64, 16, 32] {
        let f = build_hr_family(n).unwrap();
        g.bench_with_input(BenchmarkId::new("certify", n), &f, |b, f| b.iter(|| certify_hr(black_box(f))));
    }
    g.finish();
}

criterion_group!(benches, exact, subspace, hurwitz);
criterion_main!(benches);
