//! Subprocess integration tests: run the actual binary, verify exit codes,
//! report contents, the exit-code contract, determinism, and a golden
//! family table.

use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_soclebound"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("failed to run soclebound");
    let code = output.status.code().unwrap_or(-1);
    (
        code,
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
    )
}

fn ring_file(name: &str, body: &str) -> (tempfile::TempDir, String) {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    let s = path.to_str().unwrap().to_string();
    (dir, s)
}

const Q1: &str = r#"{ "vars": ["x", "y"], "char": 32003, "ideal": ["x^2", "x*y"] }"#;
const NODE: &str = r#"{ "vars": ["x", "y"], "char": 32003, "ideal": ["x*y"] }"#;
const THREE: &str = r#"{ "vars": ["x", "y", "z"], "char": 32003, "ideal": ["x*z", "y*z"] }"#;

fn json(out: &str) -> serde_json::Value {
    serde_json::from_str(out).expect("stdout is valid JSON")
}

#[test]
fn dim_commands() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, err) = run(&["dim", "--ring", &q1]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["dim"], 1);
    assert!(err.contains("elapsed_ms"), "timing diagnostic on stderr: {err}");

    let (_d, node) = ring_file("node.ring", NODE);
    let (code, out, _) = run(&["dim", "--ring", &node]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["dim"], 1);

    let (_d, three) = ring_file("three.ring", THREE);
    let (code, out, _) = run(&["dim", "--ring", &three]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["dim"], 2);
}

#[test]
fn hilbert_and_gamma() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["hilbert", "--ring", &q1, "--upto", "3"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["values"], serde_json::json!([1, 2, 1, 1]));

    let (code, out, _) = run(&["gamma", "--ring", &q1]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["dim"], 1);
    assert_eq!(v["results"]["basis"], serde_json::json!(["x"]));
}

#[test]
fn invariants_report() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["invariants", "--ring", &q1]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["c"], 1);
    assert_eq!(v["results"]["g"], 2);
    assert_eq!(v["results"]["n"], 3);
    assert_eq!(v["certification"]["c"], "exact");
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn socle_and_irreducible() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["irreducible", "--ring", &q1, "--ideal", "y"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["irreducible"], true);
    assert_eq!(v["results"]["socle_dim"], 1);

    let (code, out, _) = run(&["socle", "--ring", &q1, "--ideal", "y^2"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["socle_dim"], 2);

    // elements with sums work through the grammar
    let (_d, node) = ring_file("node.ring", NODE);
    let (code, out, _) = run(&["irreducible", "--ring", &node, "--ideal", "x+y"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["irreducible"], true);
}

#[test]
fn gorenstein_verdicts() {
    let (_d, node) = ring_file("node.ring", NODE);
    let (code, out, _) = run(&["gorenstein", "--ring", &node]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["gorenstein"], true);
    assert_eq!(v["results"]["type"], 1);

    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["gorenstein", "--ring", &q1]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["gorenstein"], false);
    assert_eq!(v["results"]["depth_ok"], false);
}

#[test]
fn limit_commands() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["limit-socle", "--ring", &q1, "--sop", "y", "--imax", "6"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["stable_socle_dim"], 1);
    assert_eq!(v["results"]["surjectivity_index"], 2);
    assert_eq!(v["certification"]["stable_socle_dim"], "certified");

    let (code, out, _) = run(&["limit-closure", "--ring", &q1, "--sop", "y", "--nmax", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["stabilized"], true);
    assert_eq!(v["results"]["closure_slice_dims"], serde_json::json!([0, 2, 1]));

    let (code, out, _) = run(&["ps-check", "--ring", &q1, "--sop", "y", "--s", "2"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["results"]["surjective_from_s"], true);

    // three-variable system, empirical certification
    let (_d, three) = ring_file("three.ring", THREE);
    let (code, out, _) =
        run(&["limit-socle", "--ring", &three, "--sop", "x+z, y", "--imax", "5"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["stable_socle_dim"], 1);
    assert_eq!(v["results"]["surjectivity_index"], 2);
    assert_eq!(v["certification"]["stable_socle_dim"], "empirical-window");
}

#[test]
fn probe_reports() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) =
        run(&["probe", "--ring", &q1, "--power", "2", "--samples", "30", "--seed", "5"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["all_reducible"], true);
    assert_eq!(v["results"]["ell_upper_bound"], 3);

    let (code, out, _) =
        run(&["probe", "--ring", &q1, "--power", "1", "--samples", "10", "--seed", "5"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["all_reducible"], false);
    assert_eq!(v["results"]["ell_lower_bound"], 1);
}

#[test]
fn exit_codes_follow_the_contract() {
    // 2: malformed file
    let (_d, bad) = ring_file("bad.ring", r#"{ "vars": ["x"], "char": 32004, "ideal": [] }"#);
    let (code, _, err) = run(&["dim", "--ring", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("error:"), "{err}");

    // 2: unknown variable in an element
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, _, err) = run(&["socle", "--ring", &q1, "--ideal", "w"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown variable"), "{err}");

    // 2: not a parameter system
    let (code, _, err) = run(&["irreducible", "--ring", &q1, "--ideal", "x"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a system of parameters"), "{err}");

    // 2: missing file
    let (code, _, _) = run(&["dim", "--ring", "/nonexistent/q.ring"]);
    assert_eq!(code, 2);

    // 2: usage error
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);

    // 3: window exhaustion past the truncation cap
    let (code, _, err) = run(&["socle", "--ring", &q1, "--ideal", "y^600"]);
    assert_eq!(code, 3);
    assert!(err.contains("error:"), "{err}");

    // 0: help and version
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
    let (code, _, _) = run(&["--version"]);
    assert_eq!(code, 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    for args in [
        vec!["invariants", "--ring", q1.as_str(), "--seed", "9"],
        vec!["probe", "--ring", q1.as_str(), "--power", "2", "--samples", "25", "--seed", "9"],
        vec!["family-xy", "--a-min", "1", "--a-max", "2", "--samples", "6", "--seed", "9"],
    ] {
        let (c1, out1, _) = run(&args);
        let (c2, out2, _) = run(&args);
        assert_eq!(c1, 0);
        assert_eq!(c2, 0);
        assert_eq!(out1, out2, "args {args:?}");
    }
}

#[test]
fn seed_environment_override() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run_with_env(&["invariants", "--ring", &q1], &[("SOCLE_PROBE_SEED", "41")]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["inputs"]["seed"], 41);
    // explicit flag wins over the environment
    let (code, out, _) = run_with_env(
        &["invariants", "--ring", &q1, "--seed", "42"],
        &[("SOCLE_PROBE_SEED", "41")],
    );
    assert_eq!(code, 0);
    assert_eq!(json(&out)["inputs"]["seed"], 42);
}

#[test]
fn char_override_rebuilds_the_field() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["invariants", "--ring", &q1, "--char", "101"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["inputs"]["char"], 101);
    assert_eq!(v["results"]["c"], 1);
    let (code, _, _) = run(&["dim", "--ring", &q1, "--char", "32004"]);
    assert_eq!(code, 2);
}

#[test]
fn golden_family_table() {
    let (code, out, _) = run(&[
        "family-xy",
        "--a-min",
        "1",
        "--a-max",
        "3",
        "--samples",
        "8",
        "--seed",
        "1",
        "--format",
        "table",
    ]);
    assert_eq!(code, 0);
    let golden = "\
command: family-xy
inputs
  a_max: 3
  a_min: 1
  char: 32003
  samples: 8
  seed: 1
results
  all_match: true
  rows:
    a  c  g  n  gamma_dim  index  expected_c  expected_g  expected_gamma  expected_n  matches  probe_L  probe_all_reducible  stable_socle_dim  ya_irreducible
    1  1  2  3  1          2      1           2           1               3           true     2        true                 1                 true
    2  2  4  5  4          3      2           4           4               5           true     4        true                 1                 true
    3  3  6  7  9          4      3           6           9               7           true     6        true                 1                 true
certification
  c: exact (dimension count)
  g: exact
  index: certified (dim 1 survival)
  probe_all_reducible: empirical-sample
";
    assert_eq!(out, golden);
}

#[test]
fn truncation_override_is_echoed() {
    let (_d, q1) = ring_file("q1.ring", Q1);
    let (code, out, _) = run(&["hilbert", "--ring", &q1, "--upto", "2", "--truncation", "17"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["inputs"]["truncation"], 17);
}
