//! Rational functions whose denominators are products of factors `(1 - t^w)`.
//!
//! The denominator is stored canonically as a sorted multiset of the positive
//! integers `w`, alongside the numerator polynomial. Every denominator in
//! this domain has that shape (powers of `(1 - t)` from the smooth part,
//! `(1 - t^r)` and `(1 - t^s)` from the basket periods, `(1 - t^w)` from
//! generator weights), so `den(0) = 1` always holds and power series
//! expansion is unconditional.

use std::fmt;

use num_traits::Zero;

use super::poly::Poly;
use super::series::TruncSeries;
use super::Rat;

/// A sorted multiset of positive integer weights, doubling as the factored
/// form of a denominator `prod_w (1 - t^w)` and as an ambient weight system.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Weights(Vec<u32>);

impl Weights {
    pub fn empty() -> Self {
        Weights(Vec::new())
    }

    /// Build from arbitrary order; weights must be positive.
    pub fn new(mut ws: Vec<u32>) -> Self {
        assert!(ws.iter().all(|&w| w > 0), "weights must be positive");
        ws.sort_unstable();
        Weights(ws)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn push(&mut self, w: u32) {
        assert!(w > 0, "weights must be positive");
        let pos = self.0.partition_point(|&x| x <= w);
        self.0.insert(pos, w);
    }

    /// Remove one copy of `w` if present.
    pub fn remove_one(&mut self, w: u32) -> bool {
        match self.0.iter().position(|&x| x == w) {
            Some(i) => {
                self.0.remove(i);
                true
            }
            None => false,
        }
    }

    fn count(&self, w: u32) -> usize {
        self.0.iter().filter(|&&x| x == w).count()
    }

    /// Per-value maximum of the two multisets (least common "denominator").
    pub fn union_max(&self, other: &Weights) -> Weights {
        let mut out = Vec::new();
        let mut values: Vec<u32> = self.0.iter().chain(other.0.iter()).copied().collect();
        values.sort_unstable();
        values.dedup();
        for w in values {
            let n = self.count(w).max(other.count(w));
            out.extend(std::iter::repeat(w).take(n));
        }
        Weights(out)
    }

    /// Saturating multiset difference `self - other`.
    pub fn difference(&self, other: &Weights) -> Weights {
        let mut out = Vec::new();
        let mut values: Vec<u32> = self.0.clone();
        values.dedup();
        for w in values {
            let n = self.count(w).saturating_sub(other.count(w));
            out.extend(std::iter::repeat(w).take(n));
        }
        Weights(out)
    }

    /// The expanded product `prod_w (1 - t^w)`.
    pub fn product_poly(&self) -> Poly {
        self.0
            .iter()
            .fold(Poly::one(), |acc, &w| &acc * &Poly::one_minus_t_pow(w))
    }

    /// Factored display with exponents grouped: `(1-t)^3 (1-t^3)^2 (1-t^9)`.
    pub fn factored_string(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let w = self.0[i];
            let n = self.count(w);
            let base = if w == 1 {
                "(1-t)".to_string()
            } else {
                format!("(1-t^{w})")
            };
            out.push(if n == 1 { base } else { format!("{base}^{n}") });
            i += n;
        }
        out.join(" ")
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl FromIterator<u32> for Weights {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Weights::new(iter.into_iter().collect())
    }
}

/// An exact rational function `num / prod_w (1 - t^w)`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den_weights: Weights,
}

impl RationalFunction {
    pub fn from_poly(num: Poly) -> Self {
        RationalFunction {
            num,
            den_weights: Weights::empty(),
        }
    }

    /// `num / prod_w (1 - t^w)`. A zero numerator is normalized to `0/1`.
    pub fn new(num: Poly, den_weights: Weights) -> Self {
        if num.is_zero() {
            return RationalFunction::from_poly(Poly::zero());
        }
        RationalFunction { num, den_weights }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        RationalFunction::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den_weights(&self) -> &Weights {
        &self.den_weights
    }

    /// The expanded denominator polynomial.
    pub fn den(&self) -> Poly {
        self.den_weights.product_poly()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact Maclaurin expansion up to `t^order`; `den(0) = 1` by
    /// construction, so this cannot fail.
    pub fn series(&self, order: usize) -> TruncSeries {
        super::series::series_div(&self.num, &self.den(), order)
            .expect("denominator is a product of (1 - t^w), so den(0) = 1")
    }

    pub fn add(&self, other: &Self) -> Self {
        let common = self.den_weights.union_max(&other.den_weights);
        let lift_a = common.difference(&self.den_weights).product_poly();
        let lift_b = common.difference(&other.den_weights).product_poly();
        RationalFunction::new(&(&self.num * &lift_a) + &(&other.num * &lift_b), common)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RationalFunction::new(self.num.scale(c), self.den_weights.clone())
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        RationalFunction::new(&self.num * p, self.den_weights.clone())
    }

    /// Multiply by `(1 - t^w)`: cancels a matching denominator factor when
    /// one is present, otherwise multiplies into the numerator.
    pub fn mul_one_minus_t_pow(&self, w: u32) -> Self {
        let mut den = self.den_weights.clone();
        if den.remove_one(w) {
            RationalFunction::new(self.num.clone(), den)
        } else {
            RationalFunction::new(&self.num * &Poly::one_minus_t_pow(w), den)
        }
    }

    /// `Some(q)` iff the function is a polynomial, decided by exact division.
    pub fn as_polynomial(&self) -> Option<Poly> {
        if self.num.is_zero() {
            return Some(Poly::zero());
        }
        self.num.divide_exact(&self.den())
    }

    /// Reduced form `(num/g, den/g)` with `g = gcd(num, den)`, normalized so
    /// the denominator has constant term 1. Canonical for comparisons.
    pub fn reduced(&self) -> (Poly, Poly) {
        let den = self.den();
        if self.num.is_zero() {
            return (Poly::zero(), Poly::one());
        }
        let g = self.num.gcd(&den);
        let num = self.num.divide_exact(&g).expect("gcd divides numerator");
        let den = den.divide_exact(&g).expect("gcd divides denominator");
        let c0 = den.coeff(0);
        debug_assert!(!c0.is_zero(), "den(0) = 1 before reduction");
        let inv = Rat::from_integer(1.into()) / c0;
        (num.scale(&inv), den.scale(&inv))
    }
}

impl PartialEq for RationalFunction {
    /// Algebraic equality by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den() == &other.num * &self.den()
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_weights.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / {}", self.num, self.den_weights.factored_string())
        }
    }
}
