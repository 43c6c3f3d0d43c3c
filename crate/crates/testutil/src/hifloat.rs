//! Dyadic high-precision real and complex arithmetic over exact rationals.
//!
//! Values are `BigRational`s rounded to a fixed number of fractional bits
//! after every operation, so denominators stay bounded while the rounding
//! error per step is at most one unit in the last place. Good enough to run
//! a 200-bit complex summation with dozens of guard bits to spare; all
//! comparisons against exact values stay in exact rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

/// Round to the nearest multiple of 2^-bits.
pub fn round_bits(x: &Rat, bits: u32) -> Rat {
    let scale = BigInt::one() << bits;
    let scaled = x * Rat::from_integer(scale.clone());
    // nearest integer: floor(x + 1/2)
    let num: BigInt = scaled.numer() * BigInt::from(2) + scaled.denom();
    let den: BigInt = scaled.denom() * BigInt::from(2);
    Rat::new(num.div_floor(&den), scale)
}

fn two_pow_neg(bits: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << bits)
}

/// arctan(1/k) by the alternating series, truncated below 2^-work_bits.
fn atan_inv(k: i64, work_bits: u32) -> Rat {
    let threshold = two_pow_neg(work_bits + 8);
    let k2 = Rat::from_integer(BigInt::from(k * k));
    let mut term = Rat::new(BigInt::one(), BigInt::from(k));
    let mut acc = Rat::zero();
    let mut i = 0u32;
    loop {
        let contrib = &term / Rat::from_integer(BigInt::from(2 * i + 1));
        if contrib.abs() < threshold {
            break;
        }
        if i % 2 == 0 {
            acc += contrib;
        } else {
            acc -= contrib;
        }
        term = term / &k2;
        i += 1;
    }
    round_bits(&acc, work_bits)
}

/// pi by Machin's formula: pi = 16 atan(1/5) - 4 atan(1/239).
pub fn pi(work_bits: u32) -> Rat {
    let a = atan_inv(5, work_bits + 16);
    let b = atan_inv(239, work_bits + 16);
    round_bits(
        &(Rat::from_integer(16.into()) * a - Rat::from_integer(4.into()) * b),
        work_bits,
    )
}

/// (cos, sin) of 2 pi x for rational x in [0, 1), by Taylor series at the
/// working precision.
pub fn cos_sin_2pi(x: &Rat, work_bits: u32) -> (Rat, Rat) {
    let theta = round_bits(&(pi(work_bits + 16) * Rat::from_integer(2.into()) * x), work_bits + 16);
    let threshold = two_pow_neg(work_bits + 16);
    let mut cos = Rat::zero();
    let mut sin = Rat::zero();
    // p = theta^j / j!, accumulated with sign (-1)^{floor(j/2)}
    let mut p = Rat::one();
    let mut j = 0u32;
    loop {
        let signed = if (j / 2) % 2 == 0 { p.clone() } else { -p.clone() };
        if j % 2 == 0 {
            cos += signed;
        } else {
            sin += signed;
        }
        // |theta| < 2 pi < 8, so terms decrease monotonically once j >= 8
        if j >= 16 && p.abs() < threshold {
            break;
        }
        p = round_bits(
            &(&p * theta.clone() / Rat::from_integer(BigInt::from(j + 1))),
            work_bits + 16,
        );
        j += 1;
    }
    (round_bits(&cos, work_bits), round_bits(&sin, work_bits))
}

/// Complex number with dyadic rational parts, rounded after each operation.
#[derive(Clone, Debug, PartialEq)]
pub struct Complex {
    pub re: Rat,
    pub im: Rat,
    bits: u32,
}

impl Complex {
    pub fn new(re: Rat, im: Rat, bits: u32) -> Self {
        Complex { re, im, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Complex::new(Rat::zero(), Rat::zero(), bits)
    }

    pub fn one(bits: u32) -> Self {
        Complex::new(Rat::one(), Rat::zero(), bits)
    }

    pub fn add(&self, o: &Complex) -> Complex {
        Complex::new(
            round_bits(&(&self.re + &o.re), self.bits),
            round_bits(&(&self.im + &o.im), self.bits),
            self.bits,
        )
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        Complex::new(
            round_bits(&(&self.re - &o.re), self.bits),
            round_bits(&(&self.im - &o.im), self.bits),
            self.bits,
        )
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        Complex::new(
            round_bits(&(&self.re * &o.re - &self.im * &o.im), self.bits),
            round_bits(&(&self.re * &o.im + &self.im * &o.re), self.bits),
            self.bits,
        )
    }

    pub fn div(&self, o: &Complex) -> Complex {
        let norm = &o.re * &o.re + &o.im * &o.im;
        assert!(!norm.is_zero(), "complex division by zero");
        Complex::new(
            round_bits(&((&self.re * &o.re + &self.im * &o.im) / &norm), self.bits),
            round_bits(&((&self.im * &o.re - &self.re * &o.im) / &norm), self.bits),
            self.bits,
        )
    }

    pub fn scale(&self, c: &Rat) -> Complex {
        Complex::new(
            round_bits(&(&self.re * c), self.bits),
            round_bits(&(&self.im * c), self.bits),
            self.bits,
        )
    }
}
