use std::process::{Command, Output};

use serde_json::Value;

fn coindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coindex")).args(args).env_remove("COINDEX_NODE_BUDGET").output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn envelope_and_exit_code_on_success() {
    let out = coindex(&["rho", "16"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "rho");
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["rho"], 9);
    assert_eq!(v["payload"]["c"], 1);
}

#[test]
fn projective_plane_chirality_query() {
    let out = coindex(&["bound", "rp2_6", "--d", "4", "--ell", "1", "--check"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let cert = &v["payload"]["certificate"];
    assert_eq!(cert["upper"], 0);
    assert_eq!(cert["lower"], 0);
    assert_eq!(cert["exact"], true);
    let step = cert["derivation"].as_array().unwrap().iter().find(|s| s["rule"] == "KNESER-COLORING-BOUND").unwrap();
    assert_eq!(step["m"], 1);
    assert_eq!(step["c"], 1);
    assert_eq!(v["payload"]["replay"]["ok"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["bound", "cp2_9", "--d", "15", "--ell", "15"][..],
        &["radon-table", "--pmax", "4", "--dmax", "12"],
        &["chi", "cp2_9", "--decompose"],
        &["bilinear", "verify", "octonion_block(2)", "--trials", "50"],
    ] {
        let a = coindex(args);
        let b = coindex(args);
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn radon_csv_small_grid() {
    let out = coindex(&["radon-table", "--pmax", "2", "--dmax", "6", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "p,1,2,3,4,5,6\n1,,1,1,3,3,5\n2,,,0,3,3,3\n");
}

#[test]
fn ascii_table_marks_circled_cells() {
    let out = coindex(&["radon-table", "--pmax", "1", "--dmax", "3", "--format", "ascii"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("1*"), "{text}");
}

#[test]
fn check_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let out = coindex(&["bound", "cp2_9", "--d", "7", "--ell", "7"]);
    assert_eq!(code(&out), 0);
    let good = dir.path().join("good.json");
    std::fs::write(&good, &out.stdout).unwrap();
    let checked = coindex(&["check", good.to_str().unwrap()]);
    assert_eq!(code(&checked), 0);
    assert_eq!(json(&checked)["payload"]["all_ok"], true);

    let mut v = json(&out);
    let upper = v["payload"]["certificate"]["upper"].as_i64().unwrap();
    v["payload"]["certificate"]["upper"] = Value::from(upper - 1);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_vec(&v).unwrap()).unwrap();
    let rejected = coindex(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&rejected), 1);
    assert_eq!(json(&rejected)["payload"]["all_ok"], false);
}

#[test]
fn check_whole_radon_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = coindex(&["radon-table", "--pmax", "3", "--dmax", "10"]);
    let path = dir.path().join("table.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let checked = coindex(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&checked), 0);
    assert_eq!(json(&checked)["payload"]["certificates"], 30);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["info", "/no/such/file.json"][..],
        &["bound", "rp2_6", "--d", "3", "--ell", "4"],
        &["bound", "rp2_6", "--d", "4", "--ell", "1", "--embed-dim", "0"],
        &["bilinear", "show", "poly_mult(1"],
        &["bilinear", "apply", "complex_block(1)", "1,2,3", "1,0"],
        &["chi", "skeleton:4"],
        &["check", "/no/such/file.json"],
    ] {
        let out = coindex(args);
        assert_eq!(code(&out), 1, "{args:?}");
        assert_eq!(json(&out)["status"], "input-error", "{args:?}");
    }
}

#[test]
fn bad_flags_are_rejected() {
    let out = coindex(&["bound", "rp2_6", "--d", "four", "--ell", "1"]);
    assert_ne!(code(&out), 0);
    let out = coindex(&["radon-table", "--format", "xml"]);
    assert_ne!(code(&out), 0);
}

#[test]
fn budget_exhaustion_exits_two() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_coindex")).args(args).env("COINDEX_NODE_BUDGET", "0").output().unwrap()
    };
    let out = run(&["chi", "discrete:5"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["status"], "budget-exceeded");
    let out = run(&["bound", "discrete:5", "--d", "4", "--ell", "4"]);
    assert_eq!(code(&out), 2);
    let v = json(&out);
    assert_eq!(v["payload"]["certificate"]["budget_exceeded"], true);
    assert!(v["payload"]["certificate"]["upper"].is_null());
}

#[test]
fn chi_of_bundled_complexes() {
    for name in ["rp2_6", "cp2_9"] {
        let out = coindex(&["chi", name, "--decompose"]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v["payload"]["chi"], 1, "{name}");
    }
}

#[test]
fn bilinear_subcommands() {
    let out = coindex(&["bilinear", "apply", "complex_block(1)", "0,1", "0,1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["payload"]["result"], serde_json::json!(["-1", "0"]));

    let out = coindex(&["bilinear", "verify", "hr16", "--trials", "100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["payload"]["probe"]["outcome"]["passed"], true);

    let out = coindex(&["bilinear", "show", "poly_mult(1,1)"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["payload"]["tensor"]["dims"], serde_json::json!([2, 2, 3]));

    let out = coindex(&["bilinear", "list", "--max-output", "8"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let names: Vec<&str> =
        v["payload"]["constructions"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"octonion_block(1)"));
    assert!(!names.contains(&"hr16"));
}
