//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order. The representation is
//! canonical: the vector is empty for the zero polynomial and the last
//! element is nonzero otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rat;

/// A dense polynomial in one variable `t` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// A constant polynomial (zero polynomial if `c` is zero).
    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial `c * t^deg`.
    pub fn monomial(c: Rat, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// The monomial `t^deg`.
    pub fn t_pow(deg: usize) -> Self {
        Poly::monomial(Rat::one(), deg)
    }

    /// The binomial `1 - t^w`.
    pub fn one_minus_t_pow(w: u32) -> Self {
        &Poly::one() - &Poly::t_pow(w as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Evaluate at a rational point by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The reversal `t^deg * p(1/t)`: coefficients in reverse order.
    ///
    /// Undefined on the zero polynomial, which is mapped to itself.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::from_coeffs(coeffs)
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`. Panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.coeffs.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dlen = d.coeffs.len();
        let lead = d.coeffs.last().expect("nonzero divisor");
        let mut quot = vec![Rat::zero(); rem.len() - dlen + 1];
        while rem.len() >= dlen {
            let c = rem.last().expect("nonempty remainder") / lead;
            let shift = rem.len() - dlen;
            for (i, di) in d.coeffs.iter().enumerate() {
                let v = &rem[shift + i] - &c * di;
                rem[shift + i] = v;
            }
            quot[shift] = c;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            // the leading term is eliminated exactly, so rem shrank
            debug_assert!(rem.len() < shift + dlen);
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Exact division: `Some(q)` with `self = q*d` iff the remainder is zero.
    pub fn divide_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (1 for coprime inputs, 0 only if both
    /// inputs are 0).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide through by the leading coefficient (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = Rat::one() / lead;
                self.scale(&inv)
            }
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + a * b;
                out[i + j] = v;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}
