//! Brute-force complex-summation oracle for the point contribution: the
//! literal sum over mu_s at high precision, with no cyclotomic grouping.
//! Used to cross-check the exact field arithmetic; the imaginary part of the
//! result doubles as evidence that the sum is real.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use orbirr::basket::PointBasketEntry;

use crate::hifloat::{cos_sin_2pi, Complex};

type Rat = BigRational;

/// The literal sum
/// `(1/s) sum_{j=1}^{s-1}, j a_i != 0 mod s, (zeta^{-nmj} - 1) / prod(1 - zeta^{-a_i j})`
/// evaluated with `bits`-bit complex arithmetic (plus internal guard bits),
/// scaled by the entry's multiplicity. Returns `(re, im)` as exact dyadic
/// rationals; `im` should be negligible.
pub fn point_contribution_float(p: &PointBasketEntry, m: i64, bits: u32) -> (Rat, Rat) {
    let s = p.s;
    let mut zeta_cache: HashMap<i64, Complex> = HashMap::new();
    let mut zeta = |e: i64| -> Complex {
        let e = e.rem_euclid(s);
        zeta_cache
            .entry(e)
            .or_insert_with(|| {
                let frac = Rat::new(e.into(), s.into());
                let (c, si) = cos_sin_2pi(&frac, bits + 40);
                Complex::new(c, si, bits + 40)
            })
            .clone()
    };
    let one = Complex::one(bits + 40);
    let mut total = Complex::zero(bits + 40);
    for j in 1..s {
        if p.a.iter().any(|&ai| (ai * j) % s == 0) {
            continue;
        }
        let num = zeta((-p.n * m).rem_euclid(s) * j).sub(&one);
        let mut den = one.clone();
        for &ai in &p.a {
            den = den.mul(&one.sub(&zeta(-ai * j)));
        }
        total = total.add(&num.div(&den));
    }
    let scale = Rat::new(p.multiplicity.into(), s.into());
    let scaled = total.scale(&scale);
    (scaled.re, scaled.im)
}

/// `|x| < 10^-digits` as an exact rational comparison.
pub fn within_decimal(x: &Rat, digits: u32) -> bool {
    let bound = Rat::new(One::one(), num_bigint::BigInt::from(10u32).pow(digits));
    let abs = if x < &Rat::zero() { -x.clone() } else { x.clone() };
    abs < bound
}
