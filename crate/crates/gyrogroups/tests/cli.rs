//! End-to-end tests of the `gyrogroups` binary: operand handling, JSON
//! output, exit codes, and byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gyrogroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyrogroups"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        !output.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn result_coords(json: &Value) -> Vec<f64> {
    json["result"]
        .as_str()
        .unwrap()
        .split(',')
        .map(|t| t.parse().unwrap())
        .collect()
}

#[test]
fn add_disc_float_pinned() {
    let out = gyrogroups(&["add", "--disc", "0.5,0", "0.5,0"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["schema_version"], "1");
    assert_eq!(json["command"], "add");
    assert_eq!(json["config"]["carrier"], "disc");
    let coords = result_coords(&json);
    assert!((coords[0] - 0.8).abs() < 1e-15);
    assert_eq!(coords[1], 0.0);
}

#[test]
fn add_disc_rational_exact() {
    let out = gyrogroups(&["add", "--disc", "--backend", "rational", "1/2,0", "0,1/2"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["config"]["backend"], "rational");
    // (1/2) ⊕ (i/2) = 10/17 + (6/17)i; the swapped operand order gives
    // 6/17 + (10/17)i.
    assert_eq!(json["result"], "10/17,6/17");
    let swapped = gyrogroups(&["add", "--disc", "--backend", "rational", "0,1/2", "1/2,0"]);
    assert_eq!(stdout_json(&swapped)["result"], "6/17,10/17");
}

#[test]
fn add_ball_identity() {
    let out = gyrogroups(&[
        "add", "--ball", "--dim", "3", "--s", "1", "0,0,0", "0.1,0.2,0.3",
    ]);
    assert!(out.status.success());
    let coords = result_coords(&stdout_json(&out));
    assert_eq!(coords, vec![0.1, 0.2, 0.3]);
}

#[test]
fn add_rejects_exterior_operand() {
    let out = gyrogroups(&["add", "--disc", "1.5,0", "0.1,0"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("outside the open ball"), "stderr: {stderr}");
    assert!(out.stdout.is_empty());
}

#[test]
fn add_rejects_dimension_mismatch() {
    let out = gyrogroups(&["add", "--ball", "--dim", "3", "0.1,0.2", "0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gyr_disc_pinned() {
    let out = gyrogroups(&["gyr", "--disc", "0.5,0", "0,0.5", "0.5,0"]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    let coords = result_coords(&json);
    assert!((coords[0] - 15.0 / 34.0).abs() < 1e-15);
    assert!((coords[1] + 4.0 / 17.0).abs() < 1e-15);
    let gyration: Vec<f64> = json["gyration"]
        .as_str()
        .unwrap()
        .split(',')
        .map(|t| t.parse().unwrap())
        .collect();
    assert!((gyration[0] - 15.0 / 17.0).abs() < 1e-15);
    assert!((gyration[1] + 8.0 / 17.0).abs() < 1e-15);
}

#[test]
fn gyr_ball_reports_coefficients() {
    let out = gyrogroups(&[
        "gyr", "--ball", "--dim", "2", "--backend", "rational", "1/2,0", "0,1/2", "1/2,0",
    ]);
    assert!(out.status.success());
    let json = stdout_json(&out);
    assert_eq!(json["result"], "15/34,-4/17");
    assert_eq!(json["coefficients"]["a"], "-1/16");
    assert_eq!(json["coefficients"]["b"], "-1/4");
    assert_eq!(json["coefficients"]["d"], "17/16");

    let float = gyrogroups(&["gyr", "--ball", "--dim", "2", "0.5,0", "0,0.5", "0.5,0"]);
    let json = stdout_json(&float);
    let a: f64 = json["coefficients"]["a"].as_str().unwrap().parse().unwrap();
    let b: f64 = json["coefficients"]["b"].as_str().unwrap().parse().unwrap();
    let d: f64 = json["coefficients"]["d"].as_str().unwrap().parse().unwrap();
    assert_eq!((a, b, d), (-0.0625, -0.25, 1.0625));
}

#[test]
fn gyr_with_zero_generator_is_identity() {
    let out = gyrogroups(&["gyr", "--disc", "0.3,0.1", "0,0", "0.2,0.2"]);
    assert!(out.status.success());
    let coords = result_coords(&stdout_json(&out));
    assert_eq!(coords, vec![0.2, 0.2]);
}

#[test]
fn suite_disc_passes_and_is_deterministic() {
    let args = ["suite", "--disc", "--samples", "400", "--seed", "42"];
    let first = gyrogroups(&args);
    assert_eq!(first.status.code(), Some(0));
    let json = stdout_json(&first);
    assert_eq!(json["all_passed"], true);
    assert_eq!(json["config"]["seed"], 42);
    assert_eq!(json["checks"].as_array().unwrap().len(), 12);

    let second = gyrogroups(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn suite_rational_ball_is_exact() {
    let out = gyrogroups(&[
        "suite", "--ball", "--dim", "3", "--s", "2", "--backend", "rational", "--samples", "40",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["exact"], true);
    for check in json["checks"].as_array().unwrap() {
        assert_eq!(check["max_residual"], 0.0, "check {}", check["name"]);
    }
}

#[test]
fn suite_break_op_fails_g3_with_exit_1() {
    let out = gyrogroups(&[
        "suite", "--ball", "--dim", "2", "--samples", "300", "--break-op",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout_json(&out);
    assert_eq!(json["all_passed"], false);
    let g3 = json["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "g3_left_gyroassociative")
        .unwrap();
    assert!(g3["failures"].as_u64().unwrap() > 0);
    assert!(g3["first_counterexample"].is_object());
}

#[test]
fn suite_break_op_requires_float_ball() {
    let out = gyrogroups(&["suite", "--disc", "--break-op"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gyrogroups(&["suite", "--ball", "--backend", "rational", "--break-op"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_gyrogroup_verdict() {
    let out = gyrogroups(&["table", &fixture("z3.txt")]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    assert_eq!(json["verdict"], "gyrogroup");
    assert_eq!(json["gyrocommutative"], true);
    assert_eq!(json["trivial_gyrations"], true);
    assert_eq!(json["identity"], 0);
    assert_eq!(json["order"], 3);

    let s3 = stdout_json(&gyrogroups(&["table", &fixture("s3.txt")]));
    assert_eq!(s3["verdict"], "gyrogroup");
    assert_eq!(s3["gyrocommutative"], false);
    assert_eq!(s3["trivial_gyrations"], true);
}

#[test]
fn table_not_gyrogroup_exit_1() {
    let out = gyrogroups(&["table", &fixture("z3_mutated.txt")]);
    assert_eq!(out.status.code(), Some(1));
    let json = stdout_json(&out);
    assert_eq!(json["verdict"], "not_gyrogroup");
    assert!(json["failed_axiom"].is_string());
    assert!(json["counterexample"].is_object());
}

#[test]
fn table_parse_error_exit_2() {
    let out = gyrogroups(&["table", &fixture("malformed.txt")]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("out of range"), "stderr: {stderr}");
    let missing = gyrogroups(&["table", "/nonexistent/table.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn table_fixture_matches_generator() {
    let text = std::fs::read_to_string(fixture("s3.txt")).unwrap();
    assert_eq!(
        gyrogroups::finite::CayleyTable::parse(&text).unwrap(),
        gyrogroups::finite::CayleyTable::symmetric_3()
    );
}

#[test]
fn limit_scan_ratios_in_band() {
    let out = gyrogroups(&["limit-scan", "1,0", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    let rows = json["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    for row in &rows[..10] {
        let ratio = row["ratio"].as_f64().unwrap();
        assert!((3.5..=4.5).contains(&ratio), "ratio {ratio}");
    }
    assert!(rows[10].get("ratio").is_none());
}

#[test]
fn limit_scan_degenerate_operand() {
    let out = gyrogroups(&["limit-scan", "1,0", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout_json(&out);
    for row in json["rows"].as_array().unwrap() {
        assert_eq!(row["error"], 0.0);
        assert!(row.get("ratio").is_none());
    }
    // Operand outside the smallest ball.
    let bad = gyrogroups(&["limit-scan", "--s-start", "1/2", "1,0", "1,0"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn every_subcommand_is_byte_deterministic() {
    let invocations: Vec<Vec<&str>> = vec![
        vec!["add", "--disc", "--backend", "rational", "1/2,0", "0,1/2"],
        vec!["gyr", "--ball", "--dim", "3", "0.5,0,0", "0,0.5,0", "0,0,0.25"],
        vec![
            "suite", "--ball", "--dim", "2", "--samples", "150", "--seed", "7",
        ],
        vec!["table", "fixtures-placeholder"],
        vec!["limit-scan", "0.5,0.25", "0.25,0.5"],
    ];
    let table_path = fixture("z3.txt");
    for mut args in invocations {
        if args[0] == "table" {
            args[1] = &table_path;
        }
        let first = gyrogroups(&args);
        let second = gyrogroups(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}
