use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use orbirr::basket::{CurveBasketEntry, PointBasketEntry, PolarizedData};
use orbirr::embed::{greedy_weights, SearchOutcome};
use orbirr::{chi_values, hilbert, point_contribution, rat, rat_int, solve_invariants, Rat};

fn golden_codim3() -> PolarizedData {
    PolarizedData::calabi_yau(
        rat(29, 27),
        rat(86, 3),
        vec![
            PointBasketEntry::new(3, [1, 1, 1], 2, 1).expect("valid"),
            PointBasketEntry::new(9, [1, 3, 5], 8, 1).expect("valid"),
        ],
        vec![CurveBasketEntry::new(3, 1, rat(1, 9), rat_int(0), 3, 22).expect("valid")],
    )
}

fn bench_point_contribution(c: &mut Criterion) {
    let entry = PointBasketEntry::new(29, [1, 12, 16], 11, 1).expect("valid");
    c.bench_function("point_contribution s=29", |b| {
        b.iter(|| point_contribution(black_box(&entry), black_box(7)).expect("exact"))
    });
}

fn bench_chi_table(c: &mut Criterion) {
    let data = golden_codim3();
    c.bench_function("chi_values m<=100 codim3", |b| {
        b.iter(|| chi_values(black_box(&data), 100).expect("valid"))
    });
}

fn bench_assemble(c: &mut Criterion) {
    let data = golden_codim3();
    c.bench_function("assemble codim3", |b| {
        b.iter(|| hilbert::assemble(black_box(&data)).expect("assembles"))
    });
}

fn bench_series_expansion(c: &mut Criterion) {
    let hs = hilbert::assemble(&golden_codim3()).expect("assembles");
    c.bench_function("series expansion to 500", |b| {
        b.iter(|| black_box(&hs).series(500))
    });
}

fn bench_full_search(c: &mut Criterion) {
    let points = vec![
        PointBasketEntry::new(3, [1, 1, 1], 2, 1).expect("valid"),
        PointBasketEntry::new(9, [1, 3, 5], 8, 1).expect("valid"),
    ];
    let curves = vec![CurveBasketEntry::new(3, 1, rat(1, 9), Rat::from_integer(0.into()), 3, 22)
        .expect("valid")];
    c.bench_function("solve+assemble+search codim3", |b| {
        b.iter(|| {
            let (d3, dc2) =
                solve_invariants(3, 6, black_box(&points), black_box(&curves)).expect("solvable");
            let data = PolarizedData::calabi_yau(d3, dc2, points.clone(), curves.clone());
            let hs = hilbert::assemble(&data).expect("assembles");
            match greedy_weights(&hs, 100, 20).expect("valid input") {
                SearchOutcome::Candidate(c) => c,
                SearchOutcome::Failure(f) => panic!("search failed: {f:?}"),
            }
        })
    });
}

criterion_group!(
    benches,
    bench_point_contribution,
    bench_chi_table,
    bench_assemble,
    bench_series_expansion,
    bench_full_search
);
criterion_main!(benches);
