//! Cyclotomic polynomials and exact arithmetic in cyclotomic fields.
//!
//! An element of Q(zeta_d) is stored in the power basis modulo the d-th
//! cyclotomic polynomial Phi_d, not modulo t^d - 1. Phi_d is irreducible over
//! Q, so the quotient is a field and every nonzero element is invertible;
//! this is what makes the `1/(1 - eps^{-a})` factors of the point
//! contributions safe to form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::sync::{Mutex, OnceLock};

use super::poly::Poly;
use super::Rat;
use crate::error::{Error, Result};

/// The d-th cyclotomic polynomial, computed by recursive division of
/// `t^d - 1` by `Phi_e` over the proper divisors `e` of `d`.
pub fn cyclotomic_poly(d: i64) -> Result<Poly> {
    if d < 1 {
        return Err(Error::CyclotomicIndex(d));
    }
    Ok(cyclotomic_cached(d as u32))
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u32, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn cyclotomic_cached(d: u32) -> Poly {
    assert!(d >= 1);
    if let Some(p) = cyclotomic_cache().lock().expect("cyclotomic cache").get(&d) {
        return p.clone();
    }
    // t^d - 1, then strip Phi_e for every proper divisor e of d
    let mut num = &Poly::t_pow(d as usize) - &Poly::one();
    for e in 1..d {
        if d % e == 0 {
            num = num
                .divide_exact(&cyclotomic_cached(e))
                .expect("Phi_e divides t^d - 1 exactly");
        }
    }
    cyclotomic_cache()
        .lock()
        .expect("cyclotomic cache")
        .insert(d, num.clone());
    num
}

/// An element of the cyclotomic field Q(zeta_d), written in the power basis
/// modulo Phi_d. The stored polynomial always has degree < phi(d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloElem {
    conductor: u32,
    coeffs: Poly,
}

impl CycloElem {
    /// Reduce an arbitrary polynomial in zeta_d modulo Phi_d.
    pub fn new(conductor: u32, value: Poly) -> Self {
        assert!(conductor >= 1, "conductor must be >= 1");
        let (_, rem) = value.div_rem(&cyclotomic_cached(conductor));
        CycloElem {
            conductor,
            coeffs: rem,
        }
    }

    pub fn zero(conductor: u32) -> Self {
        CycloElem::new(conductor, Poly::zero())
    }

    pub fn one(conductor: u32) -> Self {
        CycloElem::new(conductor, Poly::one())
    }

    pub fn from_rat(conductor: u32, c: Rat) -> Self {
        CycloElem::new(conductor, Poly::constant(c))
    }

    /// The root of unity `zeta_d^e`, for any (possibly negative) exponent.
    pub fn zeta_pow(conductor: u32, e: i128) -> Self {
        let e = e.rem_euclid(conductor as i128) as usize;
        CycloElem::new(conductor, Poly::t_pow(e))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &Poly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Multiplicative inverse, by the half-extended Euclidean algorithm
    /// against Phi_d. Phi_d is irreducible, so the gcd with any nonzero
    /// element of smaller degree is a nonzero constant.
    pub fn inv(&self) -> Result<CycloElem> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let modulus = cyclotomic_cached(self.conductor);
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, rem) = r0.div_rem(&r1);
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1.clone(), &s0 - &(&q * &s1));
        }
        assert_eq!(
            r0.degree(),
            Some(0),
            "gcd with the irreducible Phi_d must be constant"
        );
        let inv = CycloElem::new(self.conductor, s0.scale(&(Rat::from_integer(1.into()) / r0.coeff(0))));
        debug_assert!((&inv * self) == CycloElem::one(self.conductor));
        Ok(inv)
    }

    /// Extract the rational value of an element of the rational subfield.
    /// Errors if any power-basis coefficient above degree 0 is nonzero: that
    /// would mean a Galois-stable sum failed to be rational, which indicates
    /// an arithmetic bug upstream, never valid-input behaviour.
    pub fn rational_part(&self) -> Result<Rat> {
        if self.coeffs.degree().unwrap_or(0) > 0 {
            return Err(Error::NonRational {
                conductor: self.conductor,
                element: self.coeffs.to_string(),
            });
        }
        Ok(self.coeffs.coeff(0))
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        CycloElem::new(self.conductor, &self.coeffs + &rhs.coeffs)
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        CycloElem::new(self.conductor, &self.coeffs - &rhs.coeffs)
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        assert_eq!(self.conductor, rhs.conductor, "conductor mismatch");
        CycloElem::new(self.conductor, &self.coeffs * &rhs.coeffs)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod Phi_{})", self.coeffs, self.conductor)
    }
}
