use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sturm_bench::{clustered_roots, factorial_roots, sqrt_two_instance};
use sturm_core::{
    count_roots, isolate_roots, refine_root, EndpointPolicy, Interval, Rational, SturmSequence,
};

fn sequence_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("sequence");
    for n in [6_u32, 10, 14] {
        let f = factorial_roots(n);
        group.bench_function(format!("degree_{n}"), |b| {
            b.iter(|| SturmSequence::new(black_box(&f)).unwrap())
        });
    }
    group.finish();
}

fn interval_counting(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    let f = factorial_roots(10);
    let iv = Interval::new(Rational::zero(), Rational::from(10)).unwrap();
    group.bench_function("strict_degree_10", |b| {
        b.iter(|| count_roots(black_box(&f), black_box(&iv), EndpointPolicy::Strict).unwrap())
    });
    let squared = {
        let entries: Vec<(Rational, u32)> = (1..=5).map(|k| (Rational::from(k), 2)).collect();
        sturm_core::Polynomial::from_roots(&entries)
    };
    group.bench_function("squarefree_degree_10", |b| {
        b.iter(|| {
            count_roots(
                black_box(&squared),
                black_box(&iv),
                EndpointPolicy::SquareFree,
            )
            .unwrap()
        })
    });
    group.finish();
}

fn root_isolation(c: &mut Criterion) {
    let mut group = c.benchmark_group("isolate");
    for (name, f) in [
        ("separated_8", factorial_roots(8)),
        ("clustered_8", clustered_roots(8)),
    ] {
        group.bench_function(name, |b| b.iter(|| isolate_roots(black_box(&f)).unwrap()));
    }
    group.finish();
}

fn root_refinement(c: &mut Criterion) {
    let f = sqrt_two_instance();
    let report = isolate_roots(&f).unwrap().pop().unwrap();
    let eps = Rational::new(1, 1_000_000);
    c.bench_function("refine/sqrt2_to_1e-6", |b| {
        b.iter(|| refine_root(black_box(&f), black_box(&report), black_box(&eps)).unwrap())
    });
}

criterion_group!(
    benches,
    sequence_construction,
    interval_counting,
    root_isolation,
    root_refinement
);
criterion_main!(benches);
