use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use frustra::group::trivial_action;
use frustra::holonomy::enumerate_closed_sets;
use frustra::poly::{chromatic_polynomial, grand_polynomial};
use frustra::{count, Limits, Method};
use frustra_bench::cases;

fn counters(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("count");
    for case in cases() {
        for m in Method::ALL {
            group.bench_with_input(BenchmarkId::new(m.name(), case.name), &case, |b, case| {
                b.iter(|| count(black_box(&case.graph), &case.action, m, &limits).unwrap())
            });
        }
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("closed_sets");
    for case in cases() {
        group.bench_function(case.name, |b| {
            b.iter(|| enumerate_closed_sets(black_box(&case.graph), &limits).unwrap())
        });
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("poly");
    group.sample_size(20);
    for case in cases() {
        let parts = [
            case.action.clone(),
            trivial_action(case.graph.group().clone(), 1, &limits).unwrap(),
        ];
        group.bench_function(BenchmarkId::new("grand", case.name), |b| {
            b.iter(|| grand_polynomial(black_box(&case.graph), &parts, &limits).unwrap())
        });
        group.bench_function(BenchmarkId::new("chromatic", case.name), |b| {
            b.iter(|| chromatic_polynomial(black_box(&case.graph), &limits).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, counters, lattice, polynomials);
criterion_main!(benches);
