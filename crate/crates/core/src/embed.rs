//! Search for weighted-projective-space embeddings: find weight multisets W
//! with `Q(t) = P(t) prod_{w in W} (1 - t^w)` a polynomial, and read
//! generator/relation diagnostics off the numerator.

use num_traits::{Signed, Zero};

use crate::basket;
use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::exactmath::ratfunc::{RationalFunction, Weights};
use crate::exactmath::{cyclo, Rat};
use crate::hilbert::HilbertSeries;

/// A candidate ambient weighted projective space for (X, D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCandidate {
    /// Generator weights (1-t^w factors that clear the series).
    pub weights: Weights,
    /// The numerator polynomial Q(t) = P(t) prod (1 - t^w).
    pub numerator: Poly,
    /// Ambient dimension minus 3, i.e. |weights| - 4.
    pub codimension: i64,
    /// Well-formedness of P(weights).
    pub well_formed: bool,
    /// Whether Q(t) = sign * t^{deg Q} Q(1/t).
    pub symmetric: bool,
    pub symmetry_sign: Option<i8>,
}

/// Result of clearing a series against a weight multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClearOutcome {
    Polynomial(Poly),
    /// The weights do not clear every pole; carries the residual denominator
    /// in reduced form and its factorization into cyclotomics (index,
    /// multiplicity).
    NotPolynomial {
        residual: Poly,
        residual_cyclotomic: Vec<(u32, u32)>,
    },
}

/// Multiply the series by `prod (1 - t^w)` and decide polynomiality exactly.
pub fn clear_weights(rf: &RationalFunction, weights: &Weights) -> Result<ClearOutcome> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    let mut cleared = rf.clone();
    for w in weights.iter() {
        cleared = cleared.mul_one_minus_t_pow(w);
    }
    match cleared.as_polynomial() {
        Some(q) => Ok(ClearOutcome::Polynomial(q)),
        None => {
            let (_, residual) = cleared.reduced();
            let residual_cyclotomic = cyclotomic_multiplicities(&residual);
            Ok(ClearOutcome::NotPolynomial {
                residual,
                residual_cyclotomic,
            })
        }
    }
}

/// Clearing entry point for an assembled Hilbert series.
pub fn clear_series_weights(ps: &HilbertSeries, weights: &Weights) -> Result<ClearOutcome> {
    clear_weights(ps.closed(), weights)
}

/// Factor a product of cyclotomic polynomials into `(index, multiplicity)`
/// pairs. Denominators in this domain are products of `(1 - t^w)`, so every
/// monic divisor is a product of cyclotomics and the factorization is total.
fn cyclotomic_multiplicities(p: &Poly) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut rest = p.monic();
    let mut e = 1u32;
    while let Some(d) = rest.degree().filter(|&d| d > 0) {
        // phi(e) >= sqrt(e/2), so a degree-d remainder admits no cyclotomic
        // divisor of index beyond 2 d^2 + 2
        assert!(
            (e as usize) <= 2 * d * d + 2,
            "non-cyclotomic factor in denominator"
        );
        let phi = cyclo::cyclotomic_poly(e as i64).expect("e >= 1");
        if phi.degree().unwrap_or(0) <= d {
            let mut mult = 0u32;
            while let Some(q) = rest.divide_exact(&phi) {
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((e, mult));
            }
        }
        e += 1;
    }
    out
}

/// Why the search stopped short of a candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// Adjoining the required generators would exceed `max_weights`.
    WeightBudgetExceeded { degree: usize, needed: usize },
    /// The residual series is 1 up to `max_degree` yet the function is not a
    /// polynomial.
    NoResidualSignal,
}

/// Partial state returned when the search gives up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchFailure {
    pub weights_so_far: Weights,
    pub reason: FailureReason,
}

/// Search outcome: a candidate or a failure with partial state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Candidate(EmbeddingCandidate),
    Failure(SearchFailure),
}

/// Deterministic weight search, lowest degree first.
///
/// Phase 1 reads generators off the residual series: while the first nonzero
/// coefficient of `R(t) - 1` is positive, say `g` at degree `d`, adjoin `g`
/// copies of weight `d` and update the exact rational state `R`. Once that
/// coefficient turns negative the relations have started and the series
/// stops showing generators, so phase 2 clears the remaining poles directly:
/// each cyclotomic factor `Phi_e` left in the reduced denominator is
/// cancelled by a weight `e`, largest `e` first.
///
/// Polynomiality is decided by exact division at every step, never by the
/// series looking like a polynomial up to some order.
pub fn greedy_weights(
    ps: &HilbertSeries,
    max_degree: usize,
    max_weights: usize,
) -> Result<SearchOutcome> {
    if ps.source().d3 <= Rat::zero() {
        return Err(Error::NotAmple(ps.source().d3.to_string()));
    }
    let largest_period = ps.denominator_weights().max().unwrap_or(1) as usize;
    if max_degree < largest_period {
        return Err(Error::MaxDegreeTooSmall {
            required: largest_period,
            given: max_degree,
        });
    }
    // section counts must be nonnegative for the generator reading to mean
    // anything
    let coeffs = ps.closed().series(max_degree);
    for (m, c) in coeffs.coeffs().iter().enumerate() {
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                m,
                value: c.to_string(),
            });
        }
    }

    let mut state = ps.closed().clone();
    let mut chosen = Weights::empty();
    loop {
        if state.as_polynomial().is_some() {
            break;
        }
        let series = state.series(max_degree);
        let first_nonzero = (1..=max_degree)
            .map(|m| (m, series.coeff(m)))
            .find(|(_, c)| !c.is_zero());
        match first_nonzero {
            None => {
                return Ok(SearchOutcome::Failure(SearchFailure {
                    weights_so_far: chosen,
                    reason: FailureReason::NoResidualSignal,
                }));
            }
            Some((_, g)) if g.is_negative() => {
                // relations reached: phase 2, clear the remaining poles
                return finish_clearing_poles(ps, state, chosen, max_weights);
            }
            Some((d, g)) => {
                if !g.is_integer() {
                    return Err(Error::NonIntegerGeneratorCount {
                        m: d,
                        value: g.to_string(),
                    });
                }
                let count = usize::try_from(g.to_integer()).expect("positive and small");
                if chosen.len() + count > max_weights {
                    return Ok(SearchOutcome::Failure(SearchFailure {
                        weights_so_far: chosen,
                        reason: FailureReason::WeightBudgetExceeded {
                            degree: d,
                            needed: count,
                        },
                    }));
                }
                for _ in 0..count {
                    state = state.mul_one_minus_t_pow(d as u32);
                    chosen.push(d as u32);
                }
            }
        }
    }
    candidate_from_weights(ps, chosen)
}

/// Phase 2: adjoin one weight `e` per cyclotomic factor `Phi_e` remaining in
/// the reduced denominator, largest first, re-reducing after each step (a
/// factor `(1 - t^e)` also supplies `Phi_f` for every divisor `f` of `e`).
fn finish_clearing_poles(
    ps: &HilbertSeries,
    mut state: RationalFunction,
    mut chosen: Weights,
    max_weights: usize,
) -> Result<SearchOutcome> {
    loop {
        let (_, residual) = state.reduced();
        let factors = cyclotomic_multiplicities(&residual);
        let Some(&(e, _)) = factors.last() else {
            break; // nothing left: state is a polynomial
        };
        if chosen.len() + 1 > max_weights {
            return Ok(SearchOutcome::Failure(SearchFailure {
                weights_so_far: chosen,
                reason: FailureReason::WeightBudgetExceeded {
                    degree: e as usize,
                    needed: 1,
                },
            }));
        }
        state = state.mul_one_minus_t_pow(e);
        chosen.push(e);
    }
    candidate_from_weights(ps, chosen)
}

/// Build the candidate: re-derive the numerator independently through
/// `clear_weights` and verify the expansion round-trips against the series.
fn candidate_from_weights(ps: &HilbertSeries, weights: Weights) -> Result<SearchOutcome> {
    let numerator = match clear_weights(ps.closed(), &weights)? {
        ClearOutcome::Polynomial(q) => q,
        ClearOutcome::NotPolynomial { residual, .. } => unreachable!(
            "search state was polynomial but clear_weights left residual {residual}"
        ),
    };
    verify_round_trip(ps, &weights, &numerator)?;
    let (symmetric, symmetry_sign) = check_symmetry(&numerator)?;
    Ok(SearchOutcome::Candidate(EmbeddingCandidate {
        codimension: weights.len() as i64 - 4,
        well_formed: basket::is_well_formed(weights.as_slice())?,
        symmetric,
        symmetry_sign,
        numerator,
        weights,
    }))
}

/// Soundness check: `numerator / prod (1 - t^w)` re-expanded must equal the
/// input series up to `deg(numerator) + 50`.
fn verify_round_trip(ps: &HilbertSeries, weights: &Weights, numerator: &Poly) -> Result<()> {
    let order = numerator.degree().unwrap_or(0) + 50;
    let reexpanded = RationalFunction::new(numerator.clone(), weights.clone()).series(order);
    let original = ps.closed().series(order);
    for m in 0..=order {
        if reexpanded.coeff(m) != original.coeff(m) {
            return Err(Error::SeriesMismatch {
                m,
                closed: reexpanded.coeff(m).to_string(),
                direct: original.coeff(m).to_string(),
            });
        }
    }
    Ok(())
}

/// Decide whether `q(t) = sign * t^{deg q} * q(1/t)` coefficientwise.
pub fn check_symmetry(q: &Poly) -> Result<(bool, Option<i8>)> {
    if q.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    let rev = q.reversed();
    if rev == *q {
        Ok((true, Some(1)))
    } else if rev == -q {
        Ok((true, Some(-1)))
    } else {
        Ok((false, None))
    }
}

/// Read the lowest relation degrees off the numerator: the first band of
/// negative coefficients, up to the first positive coefficient after the
/// band starts. A coefficient `-c` at degree `d` contributes `c` relations
/// of degree `d`. Heuristic only: higher syzygies make deeper bands
/// non-literal.
pub fn suggest_relations(numerator: &Poly) -> Result<Vec<usize>> {
    if numerator.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    let deg = numerator.degree().unwrap_or(0);
    let mut out = Vec::new();
    let mut in_band = false;
    for d in 1..=deg {
        let c = numerator.coeff(d);
        if c.is_negative() {
            in_band = true;
            let count = usize::try_from(c.abs().to_integer()).expect("small relation count");
            out.extend(std::iter::repeat(d).take(count.max(1)));
        } else if in_band && c.is_positive() {
            break;
        }
    }
    Ok(out)
}
