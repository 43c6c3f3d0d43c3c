//! Command pipelines: chi tables, Hilbert series, embedding search,
//! self-consistency checks, and directory batch mode.

use std::path::{Path, PathBuf};
use std::time::Instant;

use num_integer::Integer;
use orbirr::embed::{self, ClearOutcome, SearchOutcome};
use orbirr::{chi, chi_values, hilbert, is_integral, Weights};

use crate::input::ResolvedInput;
use crate::report::{
    CandidateOut, CheckOut, ChiBreakdownOut, ChiRow, ClosedFormOut, DerivedOut, HilbertOut,
    IntegralityOut, Report, SearchFailureOut,
};

/// Search knobs; the defaults are generous for baskets of this size while
/// still bounding runaway searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_degree: usize,
    pub max_weights: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_degree: 100,
            max_weights: 20,
        }
    }
}

/// Outcome of a pipeline run: the report plus the process exit code.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub exit_code: i32,
}

fn base_report(resolved: &ResolvedInput, started: Instant) -> Report {
    Report {
        input: resolved.document.clone(),
        derived: resolved
            .derived
            .as_ref()
            .map(|(d3, dc2)| DerivedOut::new(d3, dc2)),
        warnings: resolved.warnings.iter().map(|w| w.to_string()).collect(),
        chi: None,
        hilbert: None,
        candidate: None,
        search_failure: None,
        check: None,
        timing_us: started.elapsed().as_micros() as u64,
    }
}

fn chi_table(resolved: &ResolvedInput, m_max: i64, verbose: bool) -> anyhow::Result<Vec<ChiRow>> {
    let mut rows = Vec::new();
    if verbose {
        for m in 1..=m_max {
            let res = chi(&resolved.data, m)?;
            rows.push(ChiRow {
                m,
                value: res.value.to_string(),
                breakdown: Some(ChiBreakdownOut {
                    polynomial_part: res.breakdown.polynomial_part.to_string(),
                    points: res
                        .breakdown
                        .point_contribs
                        .iter()
                        .map(|c| c.to_string())
                        .collect(),
                    curves: res
                        .breakdown
                        .curve_contribs
                        .iter()
                        .map(|c| c.to_string())
                        .collect(),
                }),
            });
        }
    } else {
        for (i, value) in chi_values(&resolved.data, m_max)?.iter().enumerate() {
            rows.push(ChiRow {
                m: i as i64 + 1,
                value: value.to_string(),
                breakdown: None,
            });
        }
    }
    Ok(rows)
}

/// `chi` subcommand: table of chi(X, O_X(mD)) for m = 1..m_max.
pub fn run_chi(resolved: &ResolvedInput, m_max: i64, verbose: bool) -> anyhow::Result<RunOutcome> {
    let started = Instant::now();
    let mut report = base_report(resolved, started);
    report.chi = Some(chi_table(resolved, m_max, verbose)?);
    report.timing_us = started.elapsed().as_micros() as u64;
    Ok(RunOutcome {
        report,
        exit_code: 0,
    })
}

/// `hilbert` subcommand: assemble and display the closed form, with the
/// leading coefficients as a table.
pub fn run_hilbert(resolved: &ResolvedInput, m_max: i64) -> anyhow::Result<RunOutcome> {
    let started = Instant::now();
    let hs = hilbert::assemble(&resolved.data)?;
    let mut report = base_report(resolved, started);
    report.hilbert = Some(HilbertOut::new(&hs));
    report.chi = Some(chi_table(resolved, m_max, false)?);
    report.timing_us = started.elapsed().as_micros() as u64;
    Ok(RunOutcome {
        report,
        exit_code: 0,
    })
}

/// `search` subcommand: greedy weight search, or explicit clearing when a
/// weight list is supplied. Exit code 4 when no candidate is produced.
pub fn run_search(
    resolved: &ResolvedInput,
    options: SearchOptions,
    explicit_weights: Option<&[u32]>,
    m_max: i64,
) -> anyhow::Result<RunOutcome> {
    let started = Instant::now();
    let hs = hilbert::assemble(&resolved.data)?;
    let mut report = base_report(resolved, started);
    report.hilbert = Some(HilbertOut::new(&hs));
    report.chi = Some(chi_table(resolved, m_max, false)?);

    let exit_code = match explicit_weights {
        Some(ws) => {
            let weights = Weights::new(ws.to_vec());
            match embed::clear_series_weights(&hs, &weights)? {
                ClearOutcome::Polynomial(numerator) => {
                    let (symmetric, symmetry_sign) = embed::check_symmetry(&numerator)?;
                    let relations = embed::suggest_relations(&numerator)?;
                    let candidate = embed::EmbeddingCandidate {
                        codimension: weights.len() as i64 - 4,
                        well_formed: orbirr::is_well_formed(weights.as_slice())?,
                        symmetric,
                        symmetry_sign,
                        numerator,
                        weights,
                    };
                    report.candidate = Some(CandidateOut::new(&candidate, relations));
                    0
                }
                ClearOutcome::NotPolynomial {
                    residual,
                    residual_cyclotomic,
                } => {
                    report.search_failure = Some(SearchFailureOut {
                        weights_so_far: weights.as_slice().to_vec(),
                        reason: "the supplied weights do not clear the series to a polynomial"
                            .to_string(),
                        residual_denominator: Some(residual.to_string()),
                        residual_cyclotomic: Some(residual_cyclotomic),
                    });
                    4
                }
            }
        }
        None => match embed::greedy_weights(&hs, options.max_degree, options.max_weights)? {
            SearchOutcome::Candidate(candidate) => {
                let relations = embed::suggest_relations(&candidate.numerator)?;
                report.candidate = Some(CandidateOut::new(&candidate, relations));
                0
            }
            SearchOutcome::Failure(failure) => {
                report.search_failure = Some(SearchFailureOut::from_failure(&failure));
                4
            }
        },
    };
    report.timing_us = started.elapsed().as_micros() as u64;
    Ok(RunOutcome { report, exit_code })
}

/// `check` subcommand: integrality scan over two full quasi-periods plus the
/// closed-form-vs-direct-summation comparison (Calabi-Yau only). Exit 0 iff
/// everything passes.
pub fn run_check(resolved: &ResolvedInput) -> anyhow::Result<RunOutcome> {
    let started = Instant::now();
    let data = &resolved.data;
    let mut period: i64 = 1;
    for p in &data.points {
        period = period.lcm(&p.s);
    }
    for c in &data.curves {
        period = period.lcm(&c.r);
    }
    let m_max = 2 * period;
    let values = chi_values(data, m_max)?;
    let first_bad = values
        .iter()
        .enumerate()
        .find(|(_, v)| !is_integral(v))
        .map(|(i, v)| (i as i64 + 1, v.clone()));
    let integrality = IntegralityOut {
        m_max,
        ok: first_bad.is_none(),
        first_failure_m: first_bad.as_ref().map(|(m, _)| *m),
        first_failure_value: first_bad.as_ref().map(|(_, v)| v.to_string()),
    };

    let closed_form = if data.calabi_yau {
        let order = hilbert::default_verification_order(data);
        // assemble_with_order performs exactly this comparison internally;
        // surface the first mismatch instead of bubbling the error
        match hilbert::assemble_with_order(data, order) {
            Ok(_) => Some(ClosedFormOut {
                order,
                ok: true,
                detail: None,
            }),
            Err(e) => Some(ClosedFormOut {
                order,
                ok: false,
                detail: Some(e.to_string()),
            }),
        }
    } else {
        None
    };

    let passed = integrality.ok && closed_form.as_ref().map_or(true, |c| c.ok);
    let mut report = base_report(resolved, started);
    report.check = Some(CheckOut {
        integrality,
        closed_form,
        passed,
    });
    report.timing_us = started.elapsed().as_micros() as u64;
    Ok(RunOutcome {
        report,
        exit_code: if passed { 0 } else { 1 },
    })
}

/// One row of the batch summary CSV.
#[derive(Debug)]
pub struct BatchRow {
    pub name: String,
    pub d3: String,
    pub dc2: String,
    pub weights: String,
    pub codimension: String,
    pub symmetric: String,
    pub status: String,
}

/// Batch mode: run the search pipeline over every `.json` document in a
/// directory, in filename order. Returns the summary rows and per-file
/// reports; exit 0 only if every file produced a candidate.
pub fn run_batch(
    dir: &Path,
    options: SearchOptions,
    m_max: i64,
) -> anyhow::Result<(Vec<BatchRow>, Vec<(PathBuf, Option<Report>)>, i32)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    files.sort();

    let mut rows = Vec::new();
    let mut reports = Vec::new();
    let mut exit_code = 0;
    for path in files {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_else(|| path.display().to_string());
        let outcome = std::fs::read_to_string(&path)
            .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))
            .and_then(|text| {
                crate::input::resolve_str(&text).map_err(|e| anyhow::anyhow!("{e}"))
            })
            .and_then(|resolved| run_search(&resolved, options, None, m_max));
        match outcome {
            Ok(run) => {
                let name = run
                    .report
                    .input
                    .name
                    .clone()
                    .unwrap_or_else(|| stem.clone());
                let (d3, dc2) = invariants_of(&run.report);
                let row = match &run.report.candidate {
                    Some(c) => BatchRow {
                        name,
                        d3,
                        dc2,
                        weights: c
                            .weights
                            .iter()
                            .map(|w| w.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        codimension: c.codimension.to_string(),
                        symmetric: c.symmetric.to_string(),
                        status: "ok".to_string(),
                    },
                    None => BatchRow {
                        name,
                        d3,
                        dc2,
                        weights: String::new(),
                        codimension: String::new(),
                        symmetric: String::new(),
                        status: "no candidate".to_string(),
                    },
                };
                if run.exit_code != 0 {
                    exit_code = 4;
                }
                rows.push(row);
                reports.push((path, Some(run.report)));
            }
            Err(e) => {
                exit_code = 4;
                let detail: String = e
                    .to_string()
                    .split_whitespace()
                    .collect::<Vec<_>>()
                    .join(" ");
                rows.push(BatchRow {
                    name: stem,
                    d3: String::new(),
                    dc2: String::new(),
                    weights: String::new(),
                    codimension: String::new(),
                    symmetric: String::new(),
                    status: format!("error: {detail}"),
                });
                reports.push((path, None));
            }
        }
    }
    Ok((rows, reports, exit_code))
}

fn invariants_of(report: &Report) -> (String, String) {
    if let Some(d) = &report.derived {
        return (d.d3.clone(), d.dc2.clone());
    }
    (
        report
            .input
            .d3
            .as_ref()
            .map(|r| r.0.to_string())
            .unwrap_or_default(),
        report
            .input
            .dc2
            .as_ref()
            .map(|r| r.0.to_string())
            .unwrap_or_default(),
    )
}

/// Serialize the summary rows as CSV.
pub fn summary_csv(rows: &[BatchRow]) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["name", "D3", "Dc2", "weights", "codimension", "symmetric", "status"])?;
    for row in rows {
        writer.write_record([
            &row.name,
            &row.d3,
            &row.dc2,
            &row.weights,
            &row.codimension,
            &row.symmetric,
            &row.status,
        ])?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}
