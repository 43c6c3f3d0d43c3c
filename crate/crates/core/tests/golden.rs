//! The three golden data sets, end to end at library level: invariant
//! solving, series assembly, weight search, numerators, and diagnostics.

use orbirr::basket::{CurveBasketEntry, PointBasketEntry, PolarizedData};
use orbirr::embed::{greedy_weights, suggest_relations, SearchOutcome};
use orbirr::{
    chi_values, hilbert, is_integral, rat, rat_int, solve_invariants, EmbeddingCandidate, Poly,
    Rat,
};

struct Golden {
    name: &'static str,
    h0: (i64, i64),
    points: Vec<PointBasketEntry>,
    curves: Vec<CurveBasketEntry>,
    invariants: (Rat, Rat),
    weights: &'static [u32],
    numerator: &'static [i64],
    h0_table: &'static [i64],
    symmetry_sign: i8,
}

fn point(s: i64, a: [i64; 3], n: i64) -> PointBasketEntry {
    PointBasketEntry::new(s, a, n, 1).expect("valid point")
}

fn curve(r: i64, k: i64, deg_d: Rat, tau: i64, n_c: i64) -> CurveBasketEntry {
    CurveBasketEntry::new(r, k, deg_d, Rat::from_integer(0.into()), tau, n_c).expect("valid curve")
}

fn goldens() -> Vec<Golden> {
    vec![
        Golden {
            name: "codim3",
            h0: (3, 6),
            points: vec![point(3, [1, 1, 1], 2), point(9, [1, 3, 5], 8)],
            curves: vec![curve(3, 1, rat(1, 9), 3, 22)],
            invariants: (rat(29, 27), rat(86, 3)),
            weights: &[1, 1, 1, 3, 3, 5, 9],
            numerator: &[
                1, 0, 0, 0, 0, 0, -1, 0, -1, 0, -2, 1, -1, 2, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1,
            ],
            h0_table: &[3, 6, 12, 21, 34, 53, 78, 110],
            symmetry_sign: -1,
        },
        Golden {
            name: "codim4",
            h0: (2, 4),
            points: vec![point(5, [1, 1, 3], 4)],
            curves: vec![curve(3, 1, rat_int(1), 1, 12)],
            invariants: (rat(16, 15), rat(104, 5)),
            weights: &[1, 1, 2, 3, 3, 3, 3, 5],
            numerator: &[
                1, 0, 0, 0, 0, 0, -3, -3, -3, 2, 6, 6, 2, -3, -3, -3, 0, 0, 0, 0, 0, 1,
            ],
            h0_table: &[2, 4, 10, 17, 29, 49, 71, 102],
            symmetry_sign: 1,
        },
        Golden {
            name: "codim5",
            h0: (2, 7),
            points: vec![point(4, [2, 3, 3], 3)],
            curves: vec![curve(2, 1, rat(7, 4), 2, 0)],
            invariants: (rat(15, 8), rat_int(27)),
            weights: &[1, 1, 2, 2, 2, 2, 3, 3, 4],
            numerator: &[
                1, 0, 0, 0, -3, -4, -1, 6, 6, 2, 0, -2, -6, -6, 1, 4, 3, 0, 0, 0, -1,
            ],
            h0_table: &[2, 7, 14, 29, 48, 81, 120, 178],
            symmetry_sign: -1,
        },
    ]
}

fn search(golden: &Golden) -> (PolarizedData, EmbeddingCandidate) {
    let (d3, dc2) =
        solve_invariants(golden.h0.0, golden.h0.1, &golden.points, &golden.curves)
            .expect("solvable");
    assert_eq!(
        (d3.clone(), dc2.clone()),
        golden.invariants.clone(),
        "{}: solved invariants",
        golden.name
    );
    let data =
        PolarizedData::calabi_yau(d3, dc2, golden.points.clone(), golden.curves.clone());
    let hs = hilbert::assemble(&data).expect("assembles");
    match greedy_weights(&hs, 100, 20).expect("valid input") {
        SearchOutcome::Candidate(c) => (data, c),
        SearchOutcome::Failure(f) => panic!("{}: search failed: {f:?}", golden.name),
    }
}

#[test]
fn golden_pipelines_reproduce_published_results() {
    for golden in goldens() {
        let (data, candidate) = search(&golden);
        assert_eq!(
            candidate.weights.as_slice(),
            golden.weights,
            "{}: weights",
            golden.name
        );
        let expected =
            Poly::from_coeffs(golden.numerator.iter().map(|&c| rat_int(c)).collect());
        assert_eq!(candidate.numerator, expected, "{}: numerator", golden.name);
        assert_eq!(
            candidate.codimension,
            golden.weights.len() as i64 - 4,
            "{}: codimension",
            golden.name
        );
        assert!(candidate.well_formed, "{}: well-formedness", golden.name);
        assert_eq!(
            (candidate.symmetric, candidate.symmetry_sign),
            (true, Some(golden.symmetry_sign)),
            "{}: numerator reversal symmetry",
            golden.name
        );
        let table = chi_values(&data, golden.h0_table.len() as i64).expect("valid");
        for (i, want) in golden.h0_table.iter().enumerate() {
            assert_eq!(table[i], rat_int(*want), "{}: h^0({}D)", golden.name, i + 1);
        }
    }
}

#[test]
fn golden_chi_is_integral_to_100() {
    for golden in goldens() {
        let (data, _) = search(&golden);
        for (i, value) in chi_values(&data, 100).expect("valid").iter().enumerate() {
            assert!(
                is_integral(value),
                "{}: chi at m = {} is {}",
                golden.name,
                i + 1,
                value
            );
        }
    }
}

#[test]
fn golden_relation_bands() {
    let expectations: [&[usize]; 3] = [
        &[6, 8, 10, 10],
        &[6, 6, 6, 7, 7, 7, 8, 8, 8],
        &[4, 4, 4, 5, 5, 5, 5, 6],
    ];
    for (golden, expected) in goldens().iter().zip(expectations) {
        let (_, candidate) = search(golden);
        assert_eq!(
            suggest_relations(&candidate.numerator).expect("nonzero"),
            expected,
            "{}: relation band",
            golden.name
        );
    }
}

#[test]
fn golden_coefficients_are_nonnegative_integers() {
    for golden in goldens() {
        let (data, _) = search(&golden);
        let hs = hilbert::assemble(&data).expect("assembles");
        for (m, c) in hs.series(200).iter().enumerate() {
            assert!(is_integral(c), "{}: coefficient at t^{m}", golden.name);
            assert!(
                *c >= Rat::from_integer(0.into()),
                "{}: coefficient at t^{m} is {c}",
                golden.name
            );
        }
    }
}
