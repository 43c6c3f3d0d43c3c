//! End-to-end tests of the `orbirr` binary: exit codes, JSON stability,
//! fixtures, explicit weight clearing, batch mode, and the check command.

use std::path::{Path, PathBuf};
use std::process::Command;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn orbirr(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_orbirr"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8_lossy(&output.stdout).to_string(),
        stderr: String::from_utf8_lossy(&output.stderr).to_string(),
        code: output.status.code().expect("no signal"),
    }
}

fn json_of(run: &Run) -> serde_json::Value {
    serde_json::from_str(&run.stdout).unwrap_or_else(|e| {
        panic!("stdout must be valid JSON: {e}\n---\n{}", run.stdout);
    })
}

#[test]
fn chi_table_codim3() {
    let path = fixture("codim3.json");
    let run = orbirr(&["chi", path.to_str().expect("utf8"), "--m-max", "2", "--json"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let v = json_of(&run);
    assert_eq!(v["chi"][0]["m"], 1);
    assert_eq!(v["chi"][0]["value"], "3");
    assert_eq!(v["chi"][1]["value"], "6");
    assert_eq!(v["derived"]["D3"], "29/27");
    assert_eq!(v["derived"]["Dc2"], "86/3");
}

#[test]
fn chi_table_codim4() {
    let path = fixture("codim4.json");
    let run = orbirr(&["chi", path.to_str().expect("utf8"), "--m-max", "2", "--json"]);
    assert_eq!(run.code, 0);
    let v = json_of(&run);
    assert_eq!(v["chi"][0]["value"], "2");
    assert_eq!(v["chi"][1]["value"], "4");
}

#[test]
fn chi_pure_cubic_counts_cubes() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("cubic.json");
    std::fs::write(
        &path,
        r#"{"calabi_yau": true, "D3": "6", "Dc2": "0"}"#,
    )
    .expect("writes");
    let run = orbirr(&["chi", path.to_str().expect("utf8"), "--m-max", "3", "--json"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let v = json_of(&run);
    assert_eq!(v["chi"][0]["value"], "1");
    assert_eq!(v["chi"][1]["value"], "8");
    assert_eq!(v["chi"][2]["value"], "27");
}

#[test]
fn chi_verbose_breakdown_sums() {
    let path = fixture("codim3.json");
    let run = orbirr(&[
        "chi",
        path.to_str().expect("utf8"),
        "--m-max",
        "1",
        "--verbose",
        "--json",
    ]);
    assert_eq!(run.code, 0);
    let v = json_of(&run);
    let b = &v["chi"][0]["breakdown"];
    assert_eq!(b["points"].as_array().expect("array").len(), 2);
    assert_eq!(b["curves"][0], "8/81");
}

#[test]
fn hilbert_prints_factored_form() {
    let path = fixture("codim4.json");
    let run = orbirr(&["hilbert", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 0);
    let v = json_of(&run);
    assert_eq!(
        v["hilbert"]["denominator_weights"],
        serde_json::json!([1, 1, 1, 1, 3, 3, 5])
    );
    assert_eq!(
        v["hilbert"]["denominator"],
        "(1-t)^4 (1-t^3)^2 (1-t^5)"
    );
}

#[test]
fn search_golden_codim3() {
    let path = fixture("codim3.json");
    let run = orbirr(&["search", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let v = json_of(&run);
    assert_eq!(
        v["candidate"]["weights"],
        serde_json::json!([1, 1, 1, 3, 3, 5, 9])
    );
    assert_eq!(v["candidate"]["codimension"], 3);
    assert_eq!(v["candidate"]["well_formed"], true);
}

#[test]
fn search_with_explicit_weights_codim5() {
    let path = fixture("codim5.json");
    let run = orbirr(&[
        "search",
        path.to_str().expect("utf8"),
        "--weights",
        "1,1,2,2,2,2,3,3,4",
        "--json",
    ]);
    assert_eq!(run.code, 0);
    let v = json_of(&run);
    let coeffs: Vec<String> = v["candidate"]["numerator_coeffs"]
        .as_array()
        .expect("array")
        .iter()
        .map(|c| c.as_str().expect("string").to_string())
        .collect();
    let expected: Vec<String> = [
        "1", "0", "0", "0", "-3", "-4", "-1", "6", "6", "2", "0", "-2", "-6", "-6", "1", "4",
        "3", "0", "0", "0", "-1",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    assert_eq!(coeffs, expected);
}

#[test]
fn search_underclearing_weights_exit_4() {
    let path = fixture("codim3.json");
    let run = orbirr(&[
        "search",
        path.to_str().expect("utf8"),
        "--weights",
        "1,1,1",
        "--json",
    ]);
    assert_eq!(run.code, 4);
    let v = json_of(&run);
    assert!(v["search_failure"]["reason"]
        .as_str()
        .expect("string")
        .contains("do not clear"));
    assert!(v["search_failure"]["residual_cyclotomic"].is_array());
}

#[test]
fn parse_error_exit_2() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").expect("writes");
    let run = orbirr(&["chi", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 2);
    let v = json_of(&run);
    assert_eq!(v["error"]["kind"], "parse");

    // missing file is also a parse-level failure
    let run = orbirr(&["chi", "/nonexistent/input.json"]);
    assert_eq!(run.code, 2);
}

#[test]
fn validation_error_exit_3() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("invalid.json");
    std::fs::write(
        &path,
        r#"{
          "calabi_yau": true, "h0_1": 1, "h0_2": 2,
          "curves": [{"r": 9, "k": 3, "degD": "1", "tau": 1, "N": 0}]
        }"#,
    )
    .expect("writes");
    let run = orbirr(&["chi", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 3);
    let v = json_of(&run);
    assert_eq!(v["error"]["kind"], "validation");
    assert!(v["error"]["message"]
        .as_str()
        .expect("string")
        .contains("coprime"));
}

#[test]
fn check_passes_on_all_fixtures() {
    for name in ["codim3.json", "codim4.json", "codim5.json"] {
        let path = fixture(name);
        let run = orbirr(&["check", path.to_str().expect("utf8"), "--json"]);
        assert_eq!(run.code, 0, "{name}: stderr {}", run.stderr);
        let v = json_of(&run);
        assert_eq!(v["check"]["passed"], true, "{name}");
        assert_eq!(v["check"]["integrality"]["ok"], true, "{name}");
        assert_eq!(v["check"]["closed_form"]["ok"], true, "{name}");
    }
}

#[test]
fn check_discovers_perturbed_invariant() {
    // bump N_C by one: the solved invariants absorb m = 1, 2, but the scan
    // finds a non-integer chi further out
    let text = std::fs::read_to_string(fixture("codim3.json")).expect("fixture");
    let mut doc: serde_json::Value = serde_json::from_str(&text).expect("fixture parses");
    doc["curves"][0]["N"] = serde_json::json!(23);
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("perturbed.json");
    std::fs::write(&path, serde_json::to_string(&doc).expect("serializes")).expect("writes");

    let run = orbirr(&["check", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 1, "stderr: {}", run.stderr);
    let v = json_of(&run);
    assert_eq!(v["check"]["passed"], false);
    assert_eq!(v["check"]["integrality"]["ok"], false);
    let m = v["check"]["integrality"]["first_failure_m"]
        .as_i64()
        .expect("failing m reported");
    assert!(m >= 1, "discovered failing m, got {m}");
}

#[test]
fn report_input_echo_round_trips() {
    let path = fixture("codim5.json");
    let run = orbirr(&["search", path.to_str().expect("utf8"), "--json"]);
    assert_eq!(run.code, 0);
    let v = json_of(&run);
    let echo = serde_json::to_string(&v["input"]).expect("serializes");
    let resolved = orbirr_cli::input::resolve_str(&echo).expect("echo re-resolves");
    let echo_doc: orbirr_cli::input::InputDocument =
        serde_json::from_str(&echo).expect("echo parses");
    assert_eq!(resolved.document, echo_doc);
}

#[test]
fn out_flag_writes_report_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out = dir.path().join("report.json");
    let path = fixture("codim3.json");
    let run = orbirr(&[
        "search",
        path.to_str().expect("utf8"),
        "--out",
        out.to_str().expect("utf8"),
    ]);
    assert_eq!(run.code, 0);
    let text = std::fs::read_to_string(&out).expect("report written");
    let v: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(v["candidate"]["codimension"], 3);
}

#[test]
fn batch_mode_summarizes_by_filename() {
    let dir = tempfile::tempdir().expect("tempdir");
    for name in ["codim3.json", "codim4.json", "codim5.json"] {
        std::fs::copy(fixture(name), dir.path().join(name)).expect("copies");
    }
    // an invalid document must not sink the batch
    std::fs::write(
        dir.path().join("broken.json"),
        r#"{"calabi_yau": true}"#,
    )
    .expect("writes");
    let out_dir = tempfile::tempdir().expect("tempdir");
    let run = orbirr(&[
        "search",
        "--batch",
        dir.path().to_str().expect("utf8"),
        "--out",
        out_dir.path().to_str().expect("utf8"),
    ]);
    assert_eq!(run.code, 4, "broken.json must surface as a failure");

    let csv = std::fs::read_to_string(out_dir.path().join("summary.csv")).expect("summary");
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 5, "header + four rows:\n{csv}");
    assert_eq!(
        lines[0],
        "name,D3,Dc2,weights,codimension,symmetric,status"
    );
    assert!(lines[1].starts_with("broken,"), "filename order: {}", lines[1]);
    assert!(lines[2].starts_with("codim3,29/27,86/3,"), "row: {}", lines[2]);
    assert!(lines[2].contains("\"1,1,1,3,3,5,9\",3,true,ok"), "row: {}", lines[2]);
    assert!(lines[3].contains("\"1,1,2,3,3,3,3,5\",4,true,ok"), "row: {}", lines[3]);
    assert!(lines[4].contains("\"1,1,2,2,2,2,3,3,4\",5,true,ok"), "row: {}", lines[4]);

    for name in ["codim3", "codim4", "codim5"] {
        let report = out_dir.path().join(format!("{name}.report.json"));
        assert!(report.exists(), "per-file report for {name}");
    }
}

#[test]
fn human_output_shows_series() {
    let path = fixture("codim3.json");
    let run = orbirr(&["search", path.to_str().expect("utf8")]);
    assert_eq!(run.code, 0);
    assert!(run.stdout.contains("weights: [1, 1, 1, 3, 3, 5, 9]"));
    assert!(run.stdout.contains("(1-t)^4 (1-t^3)^2 (1-t^9)"));
    assert!(run.stdout.contains("HEURISTIC"));
}
