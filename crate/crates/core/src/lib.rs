//! Exact Riemann-Roch arithmetic for polarized threefolds with quotient
//! singularities.
//!
//! The pipeline: describe the singularity basket and global intersection
//! numbers of a pair (X, D) ([`basket`]), evaluate chi(X, O_X(mD)) exactly
//! ([`rr`]), assemble the closed-form Hilbert series in the Calabi-Yau case
//! ([`hilbert`]), and search for weight multisets that clear the series into
//! a polynomial numerator, suggesting an embedding into weighted projective
//! space ([`embed`]). All arithmetic is exact over the rationals and
//! cyclotomic fields ([`exactmath`]); no floating point is used anywhere.

pub mod basket;
pub mod embed;
pub mod error;
pub mod exactmath;
pub mod hilbert;
pub mod rr;

pub use basket::{
    classify_point, is_well_formed, validate, CurveBasketEntry, PointBasketEntry, PointClass,
    PolarizedData, ValidationIssue, ValidationReport,
};
pub use embed::{
    check_symmetry, clear_series_weights, clear_weights, greedy_weights, suggest_relations,
    ClearOutcome, EmbeddingCandidate, FailureReason, SearchFailure, SearchOutcome,
};
pub use error::{Error, Result};
pub use exactmath::cyclo::{cyclotomic_poly, CycloElem};
pub use exactmath::poly::Poly;
pub use exactmath::ratfunc::{RationalFunction, Weights};
pub use exactmath::series::{series_div, TruncSeries};
pub use exactmath::{parse_rat, rat, rat_int, Rat};
pub use hilbert::{
    assemble, assemble_with_order, curve_series, default_verification_order, point_series,
    HilbertSeries,
};
pub use rr::{
    chi, chi_values, curve_contribution, is_integral, point_contribution, point_period_table,
    smallest_residue, solve_invariants, ChiBreakdown, ChiResult,
};
