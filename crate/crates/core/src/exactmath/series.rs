//! Truncated power series with an explicit truncation order.
//!
//! A `TruncSeries` of order N stores exactly N+1 coefficients. Arithmetic
//! between two series uses the minimum of the two orders and never silently
//! extends; the order is data, not ambient state.

use num_traits::Zero;

use super::poly::Poly;
use super::Rat;
use crate::error::{Error, Result};

/// A power series known exactly up to and including `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rat>,
}

impl TruncSeries {
    /// Build from coefficients `[c_0, ..., c_N]`; the order is `len - 1`.
    ///
    /// Panics on an empty list (order must be >= 0).
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least c_0");
        TruncSeries { coeffs }
    }

    /// The truncation of a polynomial to the given order.
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^m`. Panics beyond the truncation order: those
    /// coefficients are unknown, not zero.
    pub fn coeff(&self, m: usize) -> Rat {
        assert!(m <= self.order(), "coefficient beyond truncation order");
        self.coeffs[m].clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Re-truncate to `min(self.order(), order)`.
    pub fn truncated(&self, order: usize) -> Self {
        let n = order.min(self.order());
        TruncSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        TruncSeries {
            coeffs: (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    /// Truncated product at `min` of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                let v = &out[i + j] + a * b;
                out[i + j] = v;
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse at the same order; requires `c_0 != 0`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DenominatorAtZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        out.push(Rat::from_integer(1.into()) / c0);
        for n in 1..self.coeffs.len() {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc / c0);
        }
        Ok(TruncSeries { coeffs: out })
    }
}

/// Maclaurin expansion of `num/den` up to `t^order`, exact. Rejects
/// denominators with `den(0) = 0`.
pub fn series_div(num: &Poly, den: &Poly, order: usize) -> Result<TruncSeries> {
    if den.coeff(0).is_zero() {
        return Err(Error::DenominatorAtZero);
    }
    let n = TruncSeries::from_poly(num, order);
    let d = TruncSeries::from_poly(den, order);
    Ok(n.mul(&d.inverse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat_int;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).expect("small value")
            })
            .collect()
    }

    #[test]
    fn geometric_series() {
        let s = series_div(&p(&[1]), &p(&[1, -1]), 4).expect("expansion");
        assert_eq!(ints(&s), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn derivative_of_geometric() {
        // t/(1-t)^2 = sum m t^m
        let s = series_div(&p(&[0, 1]), &p(&[1, -2, 1]), 4).expect("expansion");
        assert_eq!(ints(&s), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cubes_numerator() {
        // (t^3 + 4t^2 + t)/(1-t)^4 = sum m^3 t^m; oracle: the cubes themselves.
        let den = {
            let b = p(&[1, -1]);
            let b2 = &b * &b;
            &b2 * &b2
        };
        let s = series_div(&p(&[0, 1, 4, 1]), &den, 5).expect("expansion");
        assert_eq!(ints(&s), (0..=5).map(|m: i64| m * m * m).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_vanishing_denominator() {
        assert_eq!(
            series_div(&p(&[1]), &p(&[0, 1]), 3),
            Err(Error::DenominatorAtZero)
        );
    }

    #[test]
    fn mixed_order_takes_minimum() {
        let a = TruncSeries::from_poly(&p(&[1, 1, 1]), 7);
        let b = TruncSeries::from_poly(&p(&[1, 2]), 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).order(), 3);
    }
}
