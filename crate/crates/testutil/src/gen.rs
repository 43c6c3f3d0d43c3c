//! Seeded generators of random *valid* basket data, for the property suites.

use num_integer::Integer;
use num_rational::BigRational;
use orbirr::basket::{
    validate, validate_point, CurveBasketEntry, PointBasketEntry, PolarizedData,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Rat = BigRational;

/// Deterministic RNG for reproducible suites.
pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// A random point entry satisfying every arithmetic invariant, with
/// 2 <= s <= s_max.
pub fn random_point_entry(rng: &mut StdRng, s_max: i64) -> PointBasketEntry {
    assert!(s_max >= 2);
    loop {
        let s = rng.random_range(2..=s_max);
        let a = [
            rng.random_range(1..s.max(2)),
            rng.random_range(1..s.max(2)),
            rng.random_range(1..s.max(2)),
        ];
        let n = rng.random_range(0..s);
        let multiplicity = rng.random_range(1..=2);
        let Ok(entry) = PointBasketEntry::new(s, a, n, multiplicity) else {
            continue;
        };
        if validate_point(&entry).is_empty() {
            return entry;
        }
    }
}

/// A random curve entry with 2 <= r <= r_max, gcd(k, r) = 1, deg K = 0.
pub fn random_curve_entry(rng: &mut StdRng, r_max: i64) -> CurveBasketEntry {
    assert!(r_max >= 2);
    let r = rng.random_range(2..=r_max);
    let k = loop {
        let k = rng.random_range(1..r.max(2));
        if k.gcd(&r) == 1 {
            break k;
        }
    };
    let deg_d = Rat::new(
        rng.random_range(1..=8).into(),
        rng.random_range(1..=9).into(),
    );
    let tau = rng.random_range(1..=3);
    let n_c = if r == 2 { 0 } else { rng.random_range(-30..=30) };
    CurveBasketEntry::new(r, k, deg_d, Rat::from_integer(0.into()), tau, n_c)
        .expect("generated curve data is constructible")
}

/// A random valid Calabi-Yau data set with at least one basket entry and a
/// positive D^3.
pub fn random_cy_basket(rng: &mut StdRng, s_max: i64, r_max: i64) -> PolarizedData {
    loop {
        let n_points = rng.random_range(0..=2);
        let n_curves = rng.random_range(0..=2);
        if n_points + n_curves == 0 {
            continue;
        }
        let points = (0..n_points)
            .map(|_| random_point_entry(rng, s_max))
            .collect();
        let curves = (0..n_curves)
            .map(|_| random_curve_entry(rng, r_max))
            .collect();
        let d3 = Rat::new(
            rng.random_range(1..=40).into(),
            rng.random_range(1..=12).into(),
        );
        let dc2 = Rat::new(
            rng.random_range(-40..=40).into(),
            rng.random_range(1..=12).into(),
        );
        let data = PolarizedData::calabi_yau(d3, dc2, points, curves);
        if validate(&data).is_valid() {
            return data;
        }
    }
}
