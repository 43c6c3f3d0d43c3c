//! Domain model for the singularity data of a polarized threefold (X, D):
//! point and curve baskets, global intersection numbers, and the
//! well-formedness / validity checks they must satisfy.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Rat;

/// A singular point of type `_n(1/s(a1,a2,a3))`, counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointBasketEntry {
    /// Order of the cyclic group mu_s.
    pub s: i64,
    /// Action weights, normalized into [1, s-1].
    pub a: [i64; 3],
    /// Polarization eigenvalue, normalized into [0, s-1].
    pub n: i64,
    /// Count of identical points (contributions scale linearly).
    pub multiplicity: i64,
}

impl PointBasketEntry {
    /// Normalizing constructor: reduces `a_i` into [1, s-1] and `n` into
    /// [0, s-1]. Rejects data that cannot be normalized (s < 2, a_i = 0 mod
    /// s, nonpositive multiplicity); the arithmetic invariants are checked
    /// separately by [`validate_point`].
    pub fn new(s: i64, a: [i64; 3], n: i64, multiplicity: i64) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidEntry(format!("point order s must be >= 2, got {s}")));
        }
        if multiplicity < 1 {
            return Err(Error::InvalidEntry(format!(
                "point multiplicity must be >= 1, got {multiplicity}"
            )));
        }
        let mut norm = [0i64; 3];
        for (i, &ai) in a.iter().enumerate() {
            let r = ai.rem_euclid(s);
            if r == 0 {
                return Err(Error::InvalidEntry(format!(
                    "a_{} = {} is 0 mod s = {}; weights must lie in [1, s-1]",
                    i + 1,
                    ai,
                    s
                )));
            }
            norm[i] = r;
        }
        Ok(PointBasketEntry {
            s,
            a: norm,
            n: n.rem_euclid(s),
            multiplicity,
        })
    }
}

/// Classification of a point entry per the well-formedness dichotomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointClass {
    /// `gcd(a_i, s) = 1` for all i.
    Isolated,
    /// Lies on curves of singularities; lists the 0-based indices i with
    /// `alpha_i = gcd(a_i, s) > 1`.
    Dissident { divisors: Vec<(usize, i64)> },
}

/// Classify a point entry, first checking its arithmetic invariants.
///
/// A valid entry is ISOLATED iff `gcd(a_i, s) = 1` for every i, and otherwise
/// DISSIDENT with the list of indices where the gcd is nontrivial.
pub fn classify_point(p: &PointBasketEntry) -> Result<PointClass> {
    let issues = validate_point(p);
    if !issues.is_empty() {
        return Err(Error::InvalidEntry(issues.join("; ")));
    }
    let divisors: Vec<(usize, i64)> = p
        .a
        .iter()
        .enumerate()
        .filter_map(|(i, &ai)| {
            let alpha = ai.gcd(&p.s);
            (alpha > 1).then_some((i, alpha))
        })
        .collect();
    if divisors.is_empty() {
        Ok(PointClass::Isolated)
    } else {
        Ok(PointClass::Dissident { divisors })
    }
}

/// Arithmetic invariants of a point entry; returns the violated conditions.
pub fn validate_point(p: &PointBasketEntry) -> Vec<String> {
    let mut issues = Vec::new();
    if p.s < 2 {
        issues.push(format!("s must be >= 2, got {}", p.s));
        return issues;
    }
    for (i, &ai) in p.a.iter().enumerate() {
        if !(1..p.s).contains(&ai) {
            issues.push(format!("a_{} = {} not in [1, s-1]", i + 1, ai));
        }
    }
    if p.multiplicity < 1 {
        issues.push(format!("multiplicity must be >= 1, got {}", p.multiplicity));
    }
    if !(0..p.s).contains(&p.n) {
        issues.push(format!("n = {} not in [0, s-1]", p.n));
    }
    if !issues.is_empty() {
        return issues;
    }
    // well-formedness: no two action weights share a factor with s
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let g = p.a[i].gcd(&p.a[j]).gcd(&p.s);
        if g != 1 {
            issues.push(format!(
                "gcd(a_{}, a_{}, s) = {} must be 1",
                i + 1,
                j + 1,
                g
            ));
        }
    }
    // a dissident direction forces a transverse Du Val type in the other two
    for i in 0..3 {
        let alpha = p.a[i].gcd(&p.s);
        if alpha > 1 {
            let (j, k) = match i {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            if (p.a[j] + p.a[k]) % alpha != 0 {
                issues.push(format!(
                    "dissident direction a_{} (alpha = {alpha}) requires a_{} + a_{} = 0 mod {alpha}",
                    i + 1,
                    j + 1,
                    k + 1
                ));
            }
        }
    }
    issues
}

/// A curve of singularities of transverse type `_k(1/r(1,-1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveBasketEntry {
    /// Transverse order (the curve is an A_{r-1} curve).
    pub r: i64,
    /// Polarization eigenvalue, normalized into [1, r-1], coprime to r.
    pub k: i64,
    /// deg D|_C.
    pub deg_d: Rat,
    /// deg K_X|_C; zero in the Calabi-Yau case.
    pub deg_k: Rat,
    /// Index tau_C (lcm of dissident worsening factors; 1 if none).
    pub tau: i64,
    /// The integer invariant N_C (an opaque input; irrelevant when r = 2).
    pub n_c: i64,
}

impl CurveBasketEntry {
    /// Normalizing constructor: reduces `k` into [1, r-1]. Rejects r < 2,
    /// tau < 1, or k = 0 mod r; coprimality is checked by [`validate_curve`].
    pub fn new(r: i64, k: i64, deg_d: Rat, deg_k: Rat, tau: i64, n_c: i64) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidEntry(format!(
                "curve transverse order r must be >= 2, got {r}"
            )));
        }
        if tau < 1 {
            return Err(Error::InvalidEntry(format!("index tau must be >= 1, got {tau}")));
        }
        let k = k.rem_euclid(r);
        if k == 0 {
            return Err(Error::InvalidEntry(
                "polarization eigenvalue k is 0 mod r; it must lie in [1, r-1]".to_string(),
            ));
        }
        Ok(CurveBasketEntry {
            r,
            k,
            deg_d,
            deg_k,
            tau,
            n_c,
        })
    }
}

/// Hard invariants of a curve entry; returns the violated conditions.
pub fn validate_curve(c: &CurveBasketEntry) -> Vec<String> {
    let mut issues = Vec::new();
    if c.r < 2 {
        issues.push(format!("r must be >= 2, got {}", c.r));
        return issues;
    }
    if !(1..c.r).contains(&c.k) {
        issues.push(format!("k = {} not in [1, r-1]", c.k));
    } else if c.k.gcd(&c.r) != 1 {
        issues.push(format!("k = {} and r = {} must be coprime", c.k, c.r));
    }
    if c.tau < 1 {
        issues.push(format!("tau must be >= 1, got {}", c.tau));
    }
    issues
}

/// The polarized threefold data: global intersection numbers plus the basket.
#[derive(Clone, Debug, PartialEq)]
pub struct PolarizedData {
    /// D^3.
    pub d3: Rat,
    /// D . c_2(X).
    pub dc2: Rat,
    /// D^2 . K_X.
    pub d2k: Rat,
    /// D . K_X^2.
    pub dk2: Rat,
    /// chi(O_X).
    pub chi_o: Rat,
    pub points: Vec<PointBasketEntry>,
    pub curves: Vec<CurveBasketEntry>,
    /// When set, K-terms and chi(O_X) vanish and the closed-form Hilbert
    /// series applies.
    pub calabi_yau: bool,
}

impl PolarizedData {
    /// Calabi-Yau data: K-terms and chi(O_X) are zero by definition.
    pub fn calabi_yau(
        d3: Rat,
        dc2: Rat,
        points: Vec<PointBasketEntry>,
        curves: Vec<CurveBasketEntry>,
    ) -> Self {
        PolarizedData {
            d3,
            dc2,
            d2k: Rat::zero(),
            dk2: Rat::zero(),
            chi_o: Rat::zero(),
            points,
            curves,
            calabi_yau: true,
        }
    }
}

/// One finding of [`validate`], tied to the entry that caused it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationIssue {
    /// Where the problem sits, e.g. `points[1]` or `global`.
    pub location: String,
    pub message: String,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

/// Validation outcome: violations are fatal, warnings are advisory.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<ValidationIssue>,
    pub warnings: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for w in &self.warnings {
            writeln!(f, "warning: {w}")?;
        }
        Ok(())
    }
}

/// Aggregate validation of the full polarized data set. An empty violation
/// list means every downstream operation accepts the data.
pub fn validate(data: &PolarizedData) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (idx, p) in data.points.iter().enumerate() {
        for message in validate_point(p) {
            report.violations.push(ValidationIssue {
                location: format!("points[{idx}]"),
                message,
            });
        }
    }
    for (idx, c) in data.curves.iter().enumerate() {
        let location = format!("curves[{idx}]");
        for message in validate_curve(c) {
            report.violations.push(ValidationIssue {
                location: location.clone(),
                message,
            });
        }
        if c.r == 2 && c.n_c != 0 {
            report.warnings.push(ValidationIssue {
                location: location.clone(),
                message: format!(
                    "N_C = {} is irrelevant for r = 2 (the N_C term vanishes identically)",
                    c.n_c
                ),
            });
        }
        if data.calabi_yau && !c.deg_k.is_zero() {
            report.violations.push(ValidationIssue {
                location,
                message: format!("calabi_yau requires deg K|_C = 0, got {}", c.deg_k),
            });
        }
    }
    if data.calabi_yau {
        for (name, value) in [("D2K", &data.d2k), ("DK2", &data.dk2), ("chiO", &data.chi_o)] {
            if !value.is_zero() {
                report.violations.push(ValidationIssue {
                    location: "global".to_string(),
                    message: format!("calabi_yau requires {name} = 0, got {value}"),
                });
            }
        }
    }
    if data.d3 <= Rat::zero() {
        report.warnings.push(ValidationIssue {
            location: "global".to_string(),
            message: format!(
                "D^3 = {} is not positive; the embedding search will refuse this polarization",
                data.d3
            ),
        });
    }
    report
}

/// Well-formedness of a weighted projective space `P(w_0, ..., w_n)`: for
/// every index i, the gcd of all weights except `w_i` must be 1.
pub fn is_well_formed(weights: &[u32]) -> Result<bool> {
    if weights.is_empty() {
        return Err(Error::EmptyWeights);
    }
    for omit in 0..weights.len() {
        let g = weights
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != omit)
            .fold(0u32, |acc, (_, &w)| acc.gcd(&w));
        // gcd of the empty selection is 0 (single-weight space): not 1
        if g != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}
