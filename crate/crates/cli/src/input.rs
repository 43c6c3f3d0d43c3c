//! The JSON input document and its resolution into validated polarized data.
//!
//! Fractions are encoded as strings `"p/q"` (or plain integers); JSON floats
//! never parse, so no floating point can leak into the exact pipeline.
//! Exactly one of the pairs `(D3, Dc2)` and `(h0_1, h0_2)` must be present;
//! the section-count pair implies the Calabi-Yau flag and the invariants are
//! derived through the Riemann-Roch inversion.

use std::fmt;

use orbirr::basket::{
    validate, CurveBasketEntry, PointBasketEntry, PolarizedData, ValidationIssue, ValidationReport,
};
use orbirr::{parse_rat, rat_int, solve_invariants, Rat};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational field: serialized as `"p/q"` (or `"p"`), accepted as a
/// string or a JSON integer.
#[derive(Clone, Debug, PartialEq)]
pub struct RatField(pub Rat);

impl Serialize for RatField {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RatField {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(deserializer).map_err(|_| {
            serde::de::Error::custom("expected an exact rational as \"p/q\", \"p\", or an integer")
        })? {
            Repr::Int(n) => Ok(RatField(rat_int(n))),
            Repr::Str(s) => parse_rat(&s)
                .map(RatField)
                .map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    pub s: i64,
    pub a: [i64; 3],
    pub n: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveInput {
    pub r: i64,
    pub k: i64,
    #[serde(rename = "degD")]
    pub deg_d: RatField,
    #[serde(rename = "degK", default, skip_serializing_if = "Option::is_none")]
    pub deg_k: Option<RatField>,
    pub tau: i64,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n_c: Option<i64>,
}

/// The on-disk schema. Mirrors the polarized data, with the optional
/// section-count pair in lieu of explicit invariants.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
    #[serde(default)]
    pub calabi_yau: bool,
    #[serde(rename = "D3", default, skip_serializing_if = "Option::is_none")]
    pub d3: Option<RatField>,
    #[serde(rename = "Dc2", default, skip_serializing_if = "Option::is_none")]
    pub dc2: Option<RatField>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_2: Option<i64>,
    #[serde(rename = "D2K", default, skip_serializing_if = "Option::is_none")]
    pub d2k: Option<RatField>,
    #[serde(rename = "DK2", default, skip_serializing_if = "Option::is_none")]
    pub dk2: Option<RatField>,
    #[serde(rename = "chiO", default, skip_serializing_if = "Option::is_none")]
    pub chi_o: Option<RatField>,
    #[serde(default)]
    pub points: Vec<PointInput>,
    #[serde(default)]
    pub curves: Vec<CurveInput>,
}

/// Why an input document could not be resolved.
#[derive(Debug)]
pub enum InputError {
    /// Malformed JSON or schema mismatch (exit code 2).
    Parse(String),
    /// Well-formed document with invalid data (exit code 3).
    Validation(ValidationReport),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Parse(msg) => write!(f, "parse error: {msg}"),
            InputError::Validation(report) => write!(f, "validation failed:\n{report}"),
        }
    }
}

impl std::error::Error for InputError {}

/// A validated input: normalized echo, polarized data, derived invariants
/// (when the section-count path was used), and any validation warnings.
#[derive(Clone, Debug)]
pub struct ResolvedInput {
    pub document: InputDocument,
    pub data: PolarizedData,
    pub derived: Option<(Rat, Rat)>,
    pub warnings: Vec<ValidationIssue>,
}

pub fn parse_document(text: &str) -> Result<InputDocument, InputError> {
    serde_json::from_str(text).map_err(|e| InputError::Parse(e.to_string()))
}

fn global_violation(message: String) -> ValidationIssue {
    ValidationIssue {
        location: "global".to_string(),
        message,
    }
}

/// Resolve a parsed document: construct and normalize the basket, derive
/// (D^3, D.c_2) from the section counts when given, and validate everything.
pub fn resolve(document: &InputDocument) -> Result<ResolvedInput, InputError> {
    let mut report = ValidationReport::default();

    let has_invariants = document.d3.is_some() || document.dc2.is_some();
    let has_counts = document.h0_1.is_some() || document.h0_2.is_some();
    if has_invariants && has_counts {
        report.violations.push(global_violation(
            "give either (D3, Dc2) or (h0_1, h0_2), not both".to_string(),
        ));
    }
    if !has_invariants && !has_counts {
        report.violations.push(global_violation(
            "one of the pairs (D3, Dc2) or (h0_1, h0_2) is required".to_string(),
        ));
    }
    if has_invariants && (document.d3.is_none() || document.dc2.is_none()) {
        report.violations.push(global_violation(
            "the invariant pair needs both D3 and Dc2".to_string(),
        ));
    }
    if has_counts && (document.h0_1.is_none() || document.h0_2.is_none()) {
        report.violations.push(global_violation(
            "the section-count pair needs both h0_1 and h0_2".to_string(),
        ));
    }
    if has_counts && !document.calabi_yau {
        report.violations.push(global_violation(
            "deriving (D3, Dc2) from section counts requires calabi_yau = true".to_string(),
        ));
    }

    let mut points = Vec::new();
    for (idx, p) in document.points.iter().enumerate() {
        match PointBasketEntry::new(p.s, p.a, p.n, p.multiplicity.unwrap_or(1)) {
            Ok(entry) => points.push(entry),
            Err(e) => report.violations.push(ValidationIssue {
                location: format!("points[{idx}]"),
                message: e.to_string(),
            }),
        }
    }
    let mut curves = Vec::new();
    for (idx, c) in document.curves.iter().enumerate() {
        let deg_k = c.deg_k.clone().map(|r| r.0).unwrap_or_else(|| rat_int(0));
        match CurveBasketEntry::new(c.r, c.k, c.deg_d.0.clone(), deg_k, c.tau, c.n_c.unwrap_or(0))
        {
            Ok(entry) => curves.push(entry),
            Err(e) => report.violations.push(ValidationIssue {
                location: format!("curves[{idx}]"),
                message: e.to_string(),
            }),
        }
    }
    if !report.violations.is_empty() {
        return Err(InputError::Validation(report));
    }

    let mut derived = None;
    let (d3, dc2) = if has_counts {
        let (h1, h2) = (
            document.h0_1.expect("checked above"),
            document.h0_2.expect("checked above"),
        );
        let pair = solve_invariants(h1, h2, &points, &curves).map_err(|e| {
            report
                .violations
                .push(global_violation(format!("invariant solve failed: {e}")));
            InputError::Validation(report.clone())
        })?;
        derived = Some(pair.clone());
        pair
    } else {
        (
            document.d3.clone().expect("checked above").0,
            document.dc2.clone().expect("checked above").0,
        )
    };

    let take = |field: &Option<RatField>| field.clone().map(|r| r.0).unwrap_or_else(|| rat_int(0));
    let data = PolarizedData {
        d3,
        dc2,
        d2k: take(&document.d2k),
        dk2: take(&document.dk2),
        chi_o: take(&document.chi_o),
        points,
        curves,
        calabi_yau: document.calabi_yau,
    };

    let mut full_report = validate(&data);
    if !full_report.is_valid() {
        return Err(InputError::Validation(full_report));
    }

    Ok(ResolvedInput {
        document: normalized_echo(document, &data),
        warnings: std::mem::take(&mut full_report.warnings),
        data,
        derived,
    })
}

/// Parse + resolve in one step.
pub fn resolve_str(text: &str) -> Result<ResolvedInput, InputError> {
    resolve(&parse_document(text)?)
}

/// Rebuild the document from the validated data so the echo is normalized:
/// reduced residues, explicit multiplicities, zero fields omitted.
fn normalized_echo(original: &InputDocument, data: &PolarizedData) -> InputDocument {
    let some_nonzero = |r: &Rat| {
        use num_traits::Zero;
        (!r.is_zero()).then(|| RatField(r.clone()))
    };
    InputDocument {
        name: original.name.clone(),
        notes: original.notes.clone(),
        calabi_yau: data.calabi_yau,
        d3: original
            .d3
            .as_ref()
            .map(|_| RatField(data.d3.clone())),
        dc2: original
            .dc2
            .as_ref()
            .map(|_| RatField(data.dc2.clone())),
        h0_1: original.h0_1,
        h0_2: original.h0_2,
        d2k: some_nonzero(&data.d2k),
        dk2: some_nonzero(&data.dk2),
        chi_o: some_nonzero(&data.chi_o),
        points: data
            .points
            .iter()
            .map(|p| PointInput {
                s: p.s,
                a: p.a,
                n: p.n,
                multiplicity: Some(p.multiplicity),
            })
            .collect(),
        curves: data
            .curves
            .iter()
            .map(|c| CurveInput {
                r: c.r,
                k: c.k,
                deg_d: RatField(c.deg_d.clone()),
                deg_k: some_nonzero(&c.deg_k),
                tau: c.tau,
                n_c: Some(c.n_c),
            })
            .collect(),
    }
}
