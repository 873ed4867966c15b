//! Sequential vs rayon-partitioned exhaustive scans.
//!
//! Run with `cargo bench -p catconv`. The `*/seq` and `*/par` rows of each
//! group measure the same kernel single-threaded and across the rayon
//! pool; the `parallel` feature (default) must be enabled for the `par`
//! rows to exist.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use catconv::bijection::even_zeroed_from_dyck;
use catconv::enumerate::enumerate_dyck;
use catconv::path::{DyckPath, Path};
use catconv::scan;

fn bench_even_zeroed_count(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_even_zeroed");
    group.sample_size(10);
    for len in [12usize, 16, 20] {
        group.bench_with_input(BenchmarkId::new("seq", len), &len, |b, &len| {
            b.iter(|| black_box(scan::count_matching_seq(len, Path::is_even_zeroed)));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", len), &len, |b, &len| {
            b.iter(|| black_box(scan::count_matching_par(len, Path::is_even_zeroed)));
        });
    }
    group.finish();
}

fn bench_intercept_tally(c: &mut Criterion) {
    let classify = |p: &Path| {
        p.is_even_zeroed()
            .then(|| *p.x_intercepts().last().expect("origin intercept"))
    };
    let mut group = c.benchmark_group("tally_rightmost_intercept");
    group.sample_size(10);
    for len in [12usize, 16] {
        group.bench_with_input(BenchmarkId::new("seq", len), &len, |b, &len| {
            b.iter(|| black_box(scan::tally_matching_seq(len, classify)));
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("par", len), &len, |b, &len| {
            b.iter(|| black_box(scan::tally_matching_par(len, classify)));
        });
    }
    group.finish();
}

fn bench_bijection_sweep(c: &mut Criterion) {
    let domain: Vec<DyckPath> = enumerate_dyck(10).expect("within cap").collect();
    let mut group = c.benchmark_group("even_zeroed_from_dyck_sweep");
    group.sample_size(10);
    group.bench_function("seq", |b| {
        b.iter(|| {
            domain
                .iter()
                .map(|d| even_zeroed_from_dyck(d).expect("even parameter").as_path().len())
                .sum::<usize>()
        });
    });
    #[cfg(feature = "parallel")]
    group.bench_function("par", |b| {
        use rayon::prelude::*;
        b.iter(|| {
            domain
                .par_iter()
                .map(|d| even_zeroed_from_dyck(d).expect("even parameter").as_path().len())
                .sum::<usize>()
        });
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_even_zeroed_count,
    bench_intercept_tally,
    bench_bijection_sweep
);
criterion_main!(benches);
