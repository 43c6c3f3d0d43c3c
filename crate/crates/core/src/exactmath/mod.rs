//! Exact arithmetic: rationals, dense polynomials, truncated power series,
//! rational functions with `(1 - t^w)`-factored denominators, and cyclotomic
//! field elements.
//!
//! Everything here is exact; no floating point is used anywhere in this
//! module. All values are immutable after construction and all operations are
//! pure functions, so the types are safe to share across threads.

pub mod cyclo;
pub mod poly;
pub mod ratfunc;
pub mod series;

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
///
/// `num_rational::BigRational` maintains exactly those invariants.
pub type Rat = num_rational::BigRational;

/// Shorthand for an exact fraction `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Shorthand for an exact integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Parse `p` or `p/q` into an exact rational. Floats are rejected (any input
/// that is not a pair of integers fails to parse).
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Error::ParseRat(s.to_string()))
}
