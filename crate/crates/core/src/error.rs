//! Error type shared across the library.

use thiserror::Error;

/// Errors produced by the exact-arithmetic and geometry layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as an exact rational (expected `p` or `p/q`)")]
    ParseRat(String),

    #[error("denominator vanishes at t = 0; no power series expansion")]
    DenominatorAtZero,

    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    #[error("cyclotomic polynomial index must be >= 1, got {0}")]
    CyclotomicIndex(i64),

    #[error("zero element of a cyclotomic field has no inverse")]
    ZeroInverse,

    #[error("cyclotomic element at conductor {conductor} is not rational: {element}")]
    NonRational { conductor: u32, element: String },

    #[error("invalid basket entry: {0}")]
    InvalidEntry(String),

    #[error("weight list must be nonempty")]
    EmptyWeights,

    #[error("m must be >= 1, got {0}")]
    NonPositiveM(i64),

    #[error("operation requires Calabi-Yau data (calabi_yau flag set, K-terms zero)")]
    NotCalabiYau,

    #[error("closed-form curve series requires deg K|_C = 0, got {0}")]
    CurveCanonicalDegree(String),

    #[error("embedding search requires D^3 > 0 (ample polarization), got {0}")]
    NotAmple(String),

    #[error("series coefficient at t^{m} is negative ({value}); not a section count")]
    NegativeCoefficient { m: usize, value: String },

    #[error("residual coefficient at t^{m} is not a nonnegative integer ({value})")]
    NonIntegerGeneratorCount { m: usize, value: String },

    #[error("max_degree {given} is below the largest denominator period {required}")]
    MaxDegreeTooSmall { required: usize, given: usize },

    #[error("closed form disagrees with direct summation at m = {m}: {closed} vs {direct}")]
    SeriesMismatch {
        m: usize,
        closed: String,
        direct: String,
    },

    #[error("numerator is zero; symmetry undefined")]
    ZeroNumerator,
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
