//! End-to-end tests driving the compiled `symprod` binary.

use serde_json::{json, Value};
use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symprod"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const TWO_POINTS_ON_TORUS: &str = r#"{
  "space": {"kind": "closed_surface", "genus": 1},
  "n": 2,
  "points": ["x1", "x2"],
  "generators": [[1, 0], [0, 1]]
}"#;

#[test]
fn union_reads_stdin_and_reports_the_frozen_table() {
    let out = run_with_stdin(&["union"], TWO_POINTS_ON_TORUS);
    let doc = stdout_json(&out);
    assert_eq!(doc["betti"], json!({"0": 1, "1": 4, "2": 2}));
    assert_eq!(
        doc["terms"],
        json!([
            {"j": 0, "p": 0, "q": 0, "mult": 1},
            {"j": 1, "p": 1, "q": 0, "mult": 4},
            {"j": 1, "p": 2, "q": 0, "mult": 2}
        ])
    );
}

#[test]
fn output_is_byte_identical_across_runs_and_sinks() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(TWO_POINTS_ON_TORUS.as_bytes()).expect("write input");
    let path = file.path().to_str().expect("utf-8 path");

    let first = bin().args(["union", "--input", path]).output().expect("runs");
    let second = bin().args(["union", "--input", path]).output().expect("runs");
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let sink = tempfile::NamedTempFile::new().expect("temp file");
    let sink_path = sink.path().to_str().expect("utf-8 path");
    let third = bin()
        .args(["union", "--input", path, "--output", sink_path])
        .output()
        .expect("runs");
    assert!(third.status.success());
    assert!(third.stdout.is_empty());
    assert_eq!(std::fs::read(sink_path).expect("written"), first.stdout);
}

#[test]
fn poset_round_trips_through_its_own_output() {
    let out = run_with_stdin(&["poset"], TWO_POINTS_ON_TORUS);
    let first = stdout_json(&out);
    // canonical order: by order, then by multiplicity vector
    assert_eq!(first["elements"], json!([[0, 1], [1, 0], [1, 1]]));
    assert_eq!(first["mu"], json!([1, 1, 0]));
    assert_eq!(first["labels"], json!(["x2", "x1", "x1 + x2"]));

    let resubmitted = json!({
        "space": first["space"],
        "n": first["n"],
        "points": first["points"],
        "generators": first["elements"],
    });
    let out = run_with_stdin(&["poset"], &resubmitted.to_string());
    let second = stdout_json(&out);
    assert_eq!(first["elements"], second["elements"]);
    assert_eq!(first["mu"], second["mu"]);
}

#[test]
fn complement_emits_the_two_tables_and_their_pairing() {
    let out = run_with_stdin(&["complement"], TWO_POINTS_ON_TORUS);
    let doc = stdout_json(&out);
    assert_eq!(doc["A"], json!([0, 2, 1, 0, 0]));
    assert_eq!(doc["B"], json!([0, 0, 1, 2, 1]));
    assert_eq!(doc["cohomology"], json!([1, 3, 3, 0, 0]));
}

#[test]
fn endspace_flags_the_pipeline_determined_degree() {
    let out = bin()
        .args(["endspace", "--genus", "1", "--punctures", "3", "--power", "2"])
        .output()
        .expect("runs");
    let doc = stdout_json(&out);
    assert_eq!(doc["ranks"], json!([1, 9, 9, 1, 0]));
    assert_eq!(doc["pipeline_determined_degree"], json!(3));

    let table = bin()
        .args([
            "endspace",
            "--genus",
            "1",
            "--punctures",
            "3",
            "--power",
            "2",
            "--format",
            "table",
        ])
        .output()
        .expect("runs");
    assert!(table.status.success());
    let text = String::from_utf8(table.stdout).expect("utf-8 table");
    let flagged: Vec<&str> = text
        .lines()
        .filter(|l| l.contains("(pipeline-determined)"))
        .collect();
    assert_eq!(flagged.len(), 1);
    assert!(flagged[0].trim_start().starts_with('3'), "{flagged:?}");
}

#[test]
fn distinguish_separates_homotopy_equivalent_surfaces() {
    let out = bin()
        .args([
            "distinguish",
            "--genus",
            "1",
            "--punctures",
            "3",
            "--genus2",
            "2",
            "--punctures2",
            "1",
            "--power",
            "2",
        ])
        .output()
        .expect("runs");
    let doc = stdout_json(&out);
    assert_eq!(doc["homotopy_equivalent"], json!(true));
    assert_eq!(doc["distinguishable"], json!(true));
    assert_eq!(doc["first"]["ranks"], json!([1, 9, 9, 1, 0]));
    assert_eq!(doc["second"]["ranks"], json!([1, 4, 4, 1, 0]));
}

#[test]
fn validation_errors_exit_one_with_a_diagnostic() {
    // a generator of order 3 cannot live in SP^2
    let bad_order = r#"{
      "space": {"kind": "closed_surface", "genus": 1},
      "n": 2, "points": ["x1", "x2"], "generators": [[2, 1]]
    }"#;
    let out = run_with_stdin(&["union"], bad_order);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("generator 0"), "stderr: {stderr}");

    // unsupported space kind
    let klein = r#"{
      "space": {"kind": "klein_bottle"},
      "n": 2, "points": ["x1"], "generators": [[1]]
    }"#;
    let out = run_with_stdin(&["union"], klein);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("unknown variant"), "stderr: {stderr}");

    // complement needs a closed ambient surface
    let wedge = r#"{
      "space": {"kind": "wedge_of_circles", "circles": 2},
      "n": 2, "points": ["x1", "x2"], "generators": [[1, 0], [0, 1]]
    }"#;
    let out = run_with_stdin(&["complement"], wedge);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("closed surface"), "stderr: {stderr}");

    // unreadable input file
    let out = bin()
        .args(["union", "--input", "/nonexistent/arrangement.json"])
        .output()
        .expect("runs");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn repeated_generators_warn_but_succeed() {
    let repeated = r#"{
      "space": {"kind": "closed_surface", "genus": 1},
      "n": 2, "points": ["x1", "x2"], "generators": [[1, 0], [1, 0]]
    }"#;
    let out = run_with_stdin(&["union"], repeated);
    let doc = stdout_json(&out);
    assert_eq!(doc["betti"], json!({"0": 1, "1": 2, "2": 1}));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("warning"), "stderr: {stderr}");
}

#[test]
fn selftest_exits_zero_when_green() {
    let out = bin().args(["selftest", "--seed", "7"]).output().expect("runs");
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(doc["failed"], json!(0));
    assert!(doc["total"].as_u64().expect("total") > 0);
    for report in doc["reports"].as_array().expect("reports") {
        assert_eq!(report["pass"], json!(true), "{report}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let out = bin().arg(flag).output().expect("runs");
        assert_eq!(out.status.code(), Some(0), "{flag}");
    }
    // an unknown flag is a usage error
    let out = bin().args(["union", "--bogus"]).output().expect("runs");
    assert_eq!(out.status.code(), Some(1));
}
