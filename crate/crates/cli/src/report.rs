//! Machine-readable report emitted by every subcommand, plus the
//! human-readable rendering. All numeric payloads are exact: integers, or
//! reduced fractions as strings.

use orbirr::embed::{EmbeddingCandidate, FailureReason, SearchFailure};
use orbirr::{HilbertSeries, Poly, Rat};
use serde::Serialize;

use crate::input::InputDocument;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    /// Echo of the validated, normalized input.
    pub input: InputDocument,
    /// (D^3, D.c_2) derived from the section counts, when that path was used.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<DerivedOut>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<Vec<ChiRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<CandidateOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_failure: Option<SearchFailureOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub check: Option<CheckOut>,
    /// Wall-clock time for the pipeline, in integer microseconds.
    pub timing_us: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedOut {
    #[serde(rename = "D3")]
    pub d3: String,
    #[serde(rename = "Dc2")]
    pub dc2: String,
}

impl DerivedOut {
    pub fn new(d3: &Rat, dc2: &Rat) -> Self {
        DerivedOut {
            d3: d3.to_string(),
            dc2: dc2.to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiRow {
    pub m: i64,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub breakdown: Option<ChiBreakdownOut>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChiBreakdownOut {
    pub polynomial_part: String,
    pub points: Vec<String>,
    pub curves: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HilbertOut {
    pub denominator_weights: Vec<u32>,
    pub denominator: String,
    pub numerator: String,
    pub numerator_coeffs: Vec<String>,
    /// The factored form, for eyeball comparison.
    pub display: String,
}

impl HilbertOut {
    pub fn new(hs: &HilbertSeries) -> Self {
        let den = hs.denominator_weights();
        HilbertOut {
            denominator_weights: den.as_slice().to_vec(),
            denominator: den.factored_string(),
            numerator: hs.closed().num().to_string(),
            numerator_coeffs: poly_coeff_strings(hs.closed().num()),
            display: format!("({}) / {}", hs.closed().num(), den.factored_string()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateOut {
    pub weights: Vec<u32>,
    pub ambient: String,
    pub codimension: i64,
    pub numerator: String,
    pub numerator_coeffs: Vec<String>,
    pub well_formed: bool,
    pub symmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry_sign: Option<i8>,
    /// First negative band of the numerator; heuristic only, since higher
    /// syzygies hide deeper relations.
    pub relation_degrees_heuristic: Vec<usize>,
}

impl CandidateOut {
    pub fn new(candidate: &EmbeddingCandidate, relations: Vec<usize>) -> Self {
        CandidateOut {
            weights: candidate.weights.as_slice().to_vec(),
            ambient: format!("P{}", candidate.weights),
            codimension: candidate.codimension,
            numerator: candidate.numerator.to_string(),
            numerator_coeffs: poly_coeff_strings(&candidate.numerator),
            well_formed: candidate.well_formed,
            symmetric: candidate.symmetric,
            symmetry_sign: candidate.symmetry_sign,
            relation_degrees_heuristic: relations,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchFailureOut {
    pub weights_so_far: Vec<u32>,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_denominator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_cyclotomic: Option<Vec<(u32, u32)>>,
}

impl SearchFailureOut {
    pub fn from_failure(f: &SearchFailure) -> Self {
        let reason = match f.reason {
            FailureReason::WeightBudgetExceeded { degree, needed } => format!(
                "adjoining {needed} generator(s) of degree {degree} would exceed the weight budget"
            ),
            FailureReason::NoResidualSignal => {
                "residual series shows no further generators, yet the function is not a polynomial"
                    .to_string()
            }
        };
        SearchFailureOut {
            weights_so_far: f.weights_so_far.as_slice().to_vec(),
            reason,
            residual_denominator: None,
            residual_cyclotomic: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOut {
    pub integrality: IntegralityOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormOut>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntegralityOut {
    pub m_max: i64,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure_m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure_value: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormOut {
    pub order: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Ascending exact coefficients, index = degree.
pub fn poly_coeff_strings(p: &Poly) -> Vec<String> {
    match p.degree() {
        None => vec!["0".to_string()],
        Some(d) => (0..=d).map(|i| p.coeff(i).to_string()).collect(),
    }
}

/// Plain-text rendering of a report.
pub fn render_human(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    if let Some(name) = &report.input.name {
        let _ = writeln!(out, "input: {name}");
    }
    if let Some(derived) = &report.derived {
        let _ = writeln!(out, "derived invariants: D^3 = {}, D.c2 = {}", derived.d3, derived.dc2);
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    if let Some(rows) = &report.chi {
        let _ = writeln!(out, "m | h^0 / chi");
        for row in rows {
            let _ = writeln!(out, "{:>2} | {}", row.m, row.value);
            if let Some(b) = &row.breakdown {
                let _ = writeln!(out, "     polynomial part: {}", b.polynomial_part);
                for (i, c) in b.points.iter().enumerate() {
                    let _ = writeln!(out, "     point[{i}]: {c}");
                }
                for (i, c) in b.curves.iter().enumerate() {
                    let _ = writeln!(out, "     curve[{i}]: {c}");
                }
            }
        }
    }
    if let Some(h) = &report.hilbert {
        let _ = writeln!(out, "Hilbert series: {}", h.display);
    }
    if let Some(c) = &report.candidate {
        let _ = writeln!(out, "weights: {:?}  (ambient {}, codimension {})", c.weights, c.ambient, c.codimension);
        let _ = writeln!(out, "numerator: {}", c.numerator);
        let _ = writeln!(
            out,
            "well formed: {}; symmetric: {}{}",
            c.well_formed,
            c.symmetric,
            c.symmetry_sign
                .map(|s| format!(" (sign {s:+})"))
                .unwrap_or_default()
        );
        if !c.relation_degrees_heuristic.is_empty() {
            let _ = writeln!(
                out,
                "relation degrees (HEURISTIC, first negative band): {:?}",
                c.relation_degrees_heuristic
            );
        }
    }
    if let Some(f) = &report.search_failure {
        let _ = writeln!(out, "search failed: {}", f.reason);
        let _ = writeln!(out, "weights so far: {:?}", f.weights_so_far);
        if let Some(res) = &f.residual_denominator {
            let _ = writeln!(out, "residual denominator: {res}");
        }
    }
    if let Some(c) = &report.check {
        let _ = writeln!(
            out,
            "integrality scan to m = {}: {}",
            c.integrality.m_max,
            if c.integrality.ok { "ok" } else { "FAILED" }
        );
        if let Some(m) = c.integrality.first_failure_m {
            let _ = writeln!(
                out,
                "  first non-integer chi at m = {m}: {}",
                c.integrality.first_failure_value.as_deref().unwrap_or("?")
            );
        }
        match &c.closed_form {
            Some(cf) => {
                let _ = writeln!(
                    out,
                    "closed form vs direct summation to order {}: {}{}",
                    cf.order,
                    if cf.ok { "ok" } else { "FAILED" },
                    cf.detail
                        .as_ref()
                        .map(|d| format!(" ({d})"))
                        .unwrap_or_default()
                );
            }
            None => {
                let _ = writeln!(out, "closed form check skipped (not Calabi-Yau)");
            }
        }
        let _ = writeln!(out, "check: {}", if c.passed { "PASS" } else { "FAIL" });
    }
    let _ = writeln!(out, "elapsed: {} us", report.timing_us);
    out
}
