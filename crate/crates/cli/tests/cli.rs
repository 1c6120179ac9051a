//! End-to-end tests of the command-line interface: output schemas, exit
//! codes, file inputs, and environment overrides.

use std::io::Write;
use std::process::{Command, Output};

fn lhl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lhl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lhl_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lhl"))
        .args(args)
        .envs(env.iter().map(|(k, v)| (k.to_string(), v.to_string())))
        .output()
        .expect("binary runs")
}

fn json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("valid JSON on stdout")
}

fn poset_file(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write");
    file
}

#[test]
fn derangement_equals_classical_and_its_alias() {
    let by_sequence = json(&lhl(&["derangement", "--s", "2,3,4,5"]));
    let classical = json(&lhl(&["classical", "--n", "5"]));
    let alias = json(&lhl(&["derangement-poly", "--n", "5"]));
    assert_eq!(by_sequence["poly"], classical["poly"]);
    assert_eq!(classical, alias);
    assert_eq!(by_sequence["poly"], serde_json::json!([0, 1, 21, 21, 1]));
}

#[test]
fn derangement_methods_agree() {
    let recursive = json(&lhl(&["derangement", "--s", "3,1,4"]));
    let enumerated = json(&lhl(&["derangement", "--s", "3,1,4", "--method", "enum"]));
    assert_eq!(recursive["poly"], enumerated["poly"]);
}

#[test]
fn eulerian_carries_schema_fields() {
    let output = json(&lhl(&["eulerian", "--s", "2"]));
    assert_eq!(output["poly"], serde_json::json!([1, 1]));
    assert_eq!(output["degree_convention"], 1);
    assert_eq!(output["properties"]["symmetric"], true);
}

#[test]
fn hstar_of_the_lecture_hall_simplex_is_the_eulerian_polynomial() {
    let hstar = json(&lhl(&["hstar", "--s", "2,3,4"]));
    let eulerian = json(&lhl(&["eulerian", "--s", "2,3,4"]));
    assert_eq!(hstar["poly"], eulerian["poly"]);

    let local = json(&lhl(&["local-hstar", "--s", "2,3,4"]));
    let derangement = json(&lhl(&["derangement", "--s", "2,3,4"]));
    assert_eq!(local["poly"], derangement["poly"]);
}

#[test]
fn simplex_file_input() {
    let file = poset_file("[[0],[2]]");
    let output = json(&lhl(&["hstar", "--simplex", file.path().to_str().unwrap()]));
    assert_eq!(output["poly"], serde_json::json!([1, 1]));
}

#[test]
fn order_hstar_on_the_counterexample_poset() {
    let file = poset_file(r#"{"n": 3, "covers": [[1,3],[2,3]]}"#);
    let path = file.path().to_str().unwrap();
    let output = json(&lhl(&["order-hstar", "--poset", path, "--s", "1,1,2"]));
    assert_eq!(output["poly"], serde_json::json!([1, 2, 1]));
    assert_eq!(output["properties"]["reflexive"], false);
    assert_eq!(output["properties"]["unimodal"], true);

    let bm = lhl(&["verify-bm", "--poset", path, "--s", "1,1,2"]);
    assert!(bm.status.success());
    let report: serde_json::Value = serde_json::from_slice(&bm.stdout).unwrap();
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks"][0]["id"], "betke-mcmullen");
}

#[test]
fn box_report_renders_one_row_per_face() {
    let file = poset_file(r#"{"n": 2, "covers": [[1,2]]}"#);
    let path = file.path().to_str().unwrap();
    let csv = lhl(&["box-report", "--poset", path, "--s", "1,2", "--format", "csv"]);
    assert!(csv.status.success());
    let text = String::from_utf8(csv.stdout).unwrap();
    // A chain's triangulation is one triangle: 8 faces including the empty
    // one, plus the header line.
    assert_eq!(text.lines().count(), 9);
    assert!(text.starts_with("face,local,unimodal,real_rooted\n"));

    let as_json = json(&lhl(&["box-report", "--poset", path, "--s", "1,2"]));
    assert_eq!(as_json["passes"], true);
    assert_eq!(as_json["faces"].as_array().unwrap().len(), 8);
}

#[test]
fn decompose_parts_are_the_two_derangement_polynomials() {
    let output = json(&lhl(&["decompose", "--n", "3", "--r", "2"]));
    let symmetric = json(&lhl(&["derangement", "--s", "4,6"]));
    assert_eq!(output["decomposition"]["symmetric_part"], symmetric["poly"]);

    let complementary = json(&lhl(&["derangement", "--s", "2,4,6"]));
    let mut shifted = vec![serde_json::json!(0)];
    shifted.extend(
        output["decomposition"]["complementary_part"]
            .as_array()
            .unwrap()
            .iter()
            .cloned(),
    );
    assert_eq!(serde_json::Value::Array(shifted), complementary["poly"]);
}

#[test]
fn gamma_of_a_perfect_square() {
    let output = json(&lhl(&["gamma", "--poly", "1,2,1"]));
    assert_eq!(output["gamma"], serde_json::json!([1, 0]));
    assert_eq!(output["nonnegative"], true);
}

#[test]
fn gamma_rejects_asymmetric_input() {
    let output = lhl(&["gamma", "--poly", "1,3"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("symmetric"));
}

#[test]
fn check_exit_codes_follow_the_verdict() {
    let pass = lhl(&["check", "--poly", "0,1,7,1", "--props", "symmetric,unimodal,logconcave,realrooted,gamma", "--degree", "4"]);
    assert_eq!(pass.status.code(), Some(0));

    let fail = lhl(&["check", "--poly", "1,3", "--props", "symmetric"]);
    assert_eq!(fail.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&fail.stdout).unwrap();
    assert_eq!(report["properties"]["symmetric"], false);
}

#[test]
fn verify_runs_a_suite_and_reports_every_check() {
    let output = lhl(&[
        "verify",
        "--suite",
        "recursion-oracle",
        "--max-n",
        "3",
        "--max-entry",
        "3",
        "--cases",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(report["suite"], "recursion-oracle");
    assert_eq!(report["passed"], true);
    assert!(report["total"].as_u64().unwrap() > 0);
    assert!(String::from_utf8_lossy(&output.stderr).contains("PASS"));
}

#[test]
fn verify_csv_has_one_header() {
    let output = lhl(&[
        "verify", "--suite", "smirnoff", "--max-n", "2", "--max-entry", "2", "--format", "csv",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    let headers = text
        .lines()
        .filter(|line| line.starts_with("suite,check"))
        .count();
    assert_eq!(headers, 1);
}

#[test]
fn verify_rejects_unknown_suites() {
    let output = lhl(&["verify", "--suite", "bogus"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("unknown suite"));
}

#[test]
fn suites_listing_matches_the_library() {
    let output = json(&lhl(&["suites"]));
    let names: Vec<&str> = output
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(names, lhl::suites::SUITE_NAMES);
}

#[test]
fn point_cap_override_names_the_cap() {
    let output = lhl_env(&["hstar", "--s", "4,4"], &[("LHL_MAX_POINTS", "5")]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("cap 5"), "stderr: {stderr}");
}

#[test]
fn missing_input_is_a_usage_error() {
    assert_eq!(lhl(&["hstar"]).status.code(), Some(2));
    assert_eq!(lhl(&["eulerian"]).status.code(), Some(2));
    assert_eq!(lhl(&["eulerian", "--s", "0,2"]).status.code(), Some(2));
}
