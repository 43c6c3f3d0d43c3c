//! `orbirr` command-line driver.
//!
//! Exit codes: 0 success; 1 check failure or internal error; 2 parse error;
//! 3 validation error; 4 search failure (no candidate / weights do not clear).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use orbirr_cli::input::{self, InputError, ResolvedInput};
use orbirr_cli::pipeline::{self, RunOutcome, SearchOptions};
use orbirr_cli::report::{render_human, Report};

#[derive(Parser)]
#[command(
    name = "orbirr",
    version,
    about = "Exact Riemann-Roch, Hilbert series, and weighted projective embedding search for polarized threefolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit machine-readable JSON on stdout (valid JSON regardless of outcome)
    #[arg(long, global = true)]
    json: bool,

    /// Also write the report (or batch summary CSV) to this path; in batch
    /// mode, a directory receiving summary.csv plus per-file reports
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Include the per-term breakdown in chi tables
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Table of chi(X, O_X(mD)) for m = 1..M (h^0 in the Calabi-Yau case)
    Chi {
        /// Input JSON document
        input: PathBuf,
        /// Largest m in the table
        #[arg(long = "m-max", default_value_t = 10)]
        m_max: i64,
    },
    /// Assemble the closed-form Hilbert series (Calabi-Yau only)
    Hilbert {
        input: PathBuf,
        #[arg(long = "m-max", default_value_t = 10)]
        m_max: i64,
    },
    /// Search for weights clearing the series into a polynomial numerator
    Search {
        /// Input JSON document (omit when using --batch)
        #[arg(required_unless_present = "batch", conflicts_with = "batch")]
        input: Option<PathBuf>,
        /// Largest residual degree scanned for generators
        #[arg(long = "max-degree", default_value_t = 100)]
        max_degree: usize,
        /// Weight budget before the search gives up
        #[arg(long = "max-weights", default_value_t = 20)]
        max_weights: usize,
        /// Clear against this comma-separated weight list instead of searching
        #[arg(long, value_delimiter = ',', value_name = "w1,w2,...")]
        weights: Option<Vec<u32>>,
        /// Process every .json document in a directory (filename order)
        #[arg(long, value_name = "DIR")]
        batch: Option<PathBuf>,
        #[arg(long = "m-max", default_value_t = 10)]
        m_max: i64,
    },
    /// Validate the input and run self-consistency scans
    Check { input: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(cli);
    ExitCode::from(code as u8)
}

fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Chi { input, m_max } => with_resolved(&cli, input, |resolved| {
            pipeline::run_chi(resolved, *m_max, cli.verbose)
        }),
        Command::Hilbert { input, m_max } => with_resolved(&cli, input, |resolved| {
            pipeline::run_hilbert(resolved, *m_max)
        }),
        Command::Check { input } => with_resolved(&cli, input, pipeline::run_check),
        Command::Search {
            input,
            max_degree,
            max_weights,
            weights,
            batch,
            m_max,
        } => {
            let options = SearchOptions {
                max_degree: *max_degree,
                max_weights: *max_weights,
            };
            match batch {
                Some(dir) => run_batch(&cli, dir, options, *m_max),
                None => {
                    let input = input.as_ref().expect("clap enforces input xor batch");
                    with_resolved(&cli, input, |resolved| {
                        pipeline::run_search(resolved, options, weights.as_deref(), *m_max)
                    })
                }
            }
        }
    }
}

/// Load, resolve, run; print the report and map errors to exit codes.
fn with_resolved(
    cli: &Cli,
    path: &PathBuf,
    run: impl FnOnce(&ResolvedInput) -> anyhow::Result<RunOutcome>,
) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return emit_error(cli, "parse", &format!("{}: {e}", path.display()), 2),
    };
    let resolved = match input::resolve_str(&text) {
        Ok(resolved) => resolved,
        Err(err @ InputError::Parse(_)) => return emit_error(cli, "parse", &err.to_string(), 2),
        Err(err @ InputError::Validation(_)) => {
            return emit_error(cli, "validation", &err.to_string(), 3)
        }
    };
    match run(&resolved) {
        Ok(outcome) => {
            emit_report(cli, &outcome.report);
            outcome.exit_code
        }
        Err(e) => {
            // search-level refusals (non-ample, negative coefficients, window
            // too small) are failures of the run, not of the input document
            let msg = e.to_string();
            let code = if msg.contains("Calabi-Yau") { 3 } else { 4 };
            emit_error(cli, "run", &msg, code)
        }
    }
}

fn run_batch(cli: &Cli, dir: &PathBuf, options: SearchOptions, m_max: i64) -> i32 {
    match pipeline::run_batch(dir, options, m_max) {
        Ok((rows, reports, exit_code)) => {
            let csv = match pipeline::summary_csv(&rows) {
                Ok(csv) => csv,
                Err(e) => return emit_error(cli, "run", &e.to_string(), 1),
            };
            if let Some(out_dir) = &cli.out {
                if let Err(e) = write_batch_outputs(out_dir, &csv, &reports) {
                    return emit_error(cli, "run", &e.to_string(), 1);
                }
            }
            if cli.json {
                let rows_json: Vec<serde_json::Value> = reports
                    .iter()
                    .map(|(path, report)| {
                        serde_json::json!({
                            "file": path.display().to_string(),
                            "report": report,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "batch": rows_json, "summary_csv": csv })
                );
            } else {
                print!("{csv}");
            }
            exit_code
        }
        Err(e) => emit_error(cli, "run", &e.to_string(), 1),
    }
}

fn write_batch_outputs(
    out_dir: &PathBuf,
    csv: &str,
    reports: &[(PathBuf, Option<Report>)],
) -> anyhow::Result<()> {
    std::fs::create_dir_all(out_dir)?;
    std::fs::write(out_dir.join("summary.csv"), csv)?;
    for (path, report) in reports {
        if let Some(report) = report {
            let stem = path
                .file_stem()
                .map(|s| s.to_string_lossy().to_string())
                .unwrap_or_else(|| "report".to_string());
            std::fs::write(
                out_dir.join(format!("{stem}.report.json")),
                serde_json::to_string_pretty(report)?,
            )?;
        }
    }
    Ok(())
}

fn emit_report(cli: &Cli, report: &Report) {
    let payload = if cli.json {
        serde_json::to_string_pretty(report).expect("report serializes")
    } else {
        render_human(report)
    };
    println!("{payload}");
    if let Some(out) = &cli.out {
        // the file always gets the JSON form; stdout follows --json
        let file_payload =
            serde_json::to_string_pretty(report).expect("report serializes");
        if let Err(e) = std::fs::write(out, file_payload) {
            eprintln!("warning: could not write {}: {e}", out.display());
        }
    }
}

fn emit_error(cli: &Cli, kind: &str, message: &str, code: i32) -> i32 {
    if cli.json {
        println!(
            "{}",
            serde_json::json!({ "error": { "kind": kind, "message": message, "exit_code": code } })
        );
    } else {
        eprintln!("error ({kind}): {message}");
    }
    code
}
