use std::process::Command;

use burnside_cli::{run, EXIT_COMPUTATION, EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["burnside"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn call_json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = call(&a);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

fn keys(v: &Value) -> Vec<String> {
    let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
    k.sort();
    k
}

#[test]
fn verify_cyclic_three() {
    let v = call_json(&["verify", "--group", "cyclic:3"]);
    assert_eq!(v["status"], "SUCCESS");
    assert_eq!(v["units"], 2);
    assert_eq!(keys(&v), ["N", "group", "r", "rank_D_mod2", "results", "status", "units"]);
    for r in v["results"].as_array().unwrap() {
        assert_eq!(keys(r), ["coeffs", "delta", "mu", "verified"]);
    }
}

#[test]
fn marks_symmetric_three() {
    let v = call_json(&["marks", "--group", "symmetric:3"]);
    assert_eq!(keys(&v), ["order", "psi"]);
    assert_eq!(v["order"], serde_json::json!(["1.1", "2.1", "3.1", "6.1"]));
    assert_eq!(v["psi"], serde_json::json!([[6, 3, 2, 1], [0, 1, 0, 1], [0, 0, 2, 1], [0, 0, 0, 1]]));
}

#[test]
fn factor_standard_basic_degree() {
    let v = call_json(&["factor", "--group", "symmetric:3", "--coeffs", "1,-2,0,1"]);
    assert_eq!(v["mu"], serde_json::json!([0, 0, 1]));
    assert_eq!(v["verified"], true);
    let text = call(&["factor", "--group", "symmetric:3", "--coeffs", "1,-2,-1,1"]);
    assert_eq!(text.code, EXIT_OK);
    assert!(text.stdout.contains("mu (0, 1, 1)"));
}

#[test]
fn symmetric_four_is_a_counterexample() {
    let o = call(&["verify", "--group", "symmetric:4", "--format", "json"]);
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["status"], "COUNTEREXAMPLE");
    assert_eq!(v["units"], 64);
    assert_eq!(v["rank_D_mod2"], 5);
    let failures: Vec<&Value> = v["results"].as_array().unwrap().iter().filter(|r| r["mu"].is_null()).collect();
    assert_eq!(failures.len(), 32);
    assert!(failures.iter().all(|r| r["certificate"].is_array()));
    // an unfactorable unit passed to `factor`
    let coeffs: Vec<String> = failures[0]["coeffs"].as_array().unwrap().iter().map(|c| c.to_string()).collect();
    let joined = coeffs.join(",");
    let o = call(&["factor", "--group", "symmetric:4", "--coeffs", &joined]);
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    assert!(o.stdout.contains("mu none"));
}

#[test]
fn degree_from_counts_and_blocks() {
    let v = call_json(&["degree", "--group", "symmetric:3", "--mu", "0,1,1"]);
    assert_eq!(v["coeffs"], serde_json::json!([1, -2, -1, 1]));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("blocks.json");
    std::fs::write(&path, r#"{"blocks": [{"k": 1, "matrix": [["-1"]]}, {"k": 2, "matrix": [["-3/2"]]}]}"#).unwrap();
    let v = call_json(&["degree", "--group", "symmetric:3", "--blocks", path.to_str().unwrap()]);
    assert_eq!(v["coeffs"], serde_json::json!([0, 0, 1, -1]));
    assert_eq!(v["mu"], serde_json::json!([1, 1, 0]));
    std::fs::write(&path, r#"{"blocks": [{"k": 3, "matrix": [["1", "1"], ["1", "1"]]}]}"#).unwrap();
    let o = call(&["degree", "--group", "symmetric:3", "--blocks", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: SingularBlock:"));
}

#[test]
fn schemas_of_other_documents() {
    let v = call_json(&["units", "--group", "cyclic:2"]);
    assert_eq!(keys(&v), ["order", "units"]);
    assert_eq!(v["units"].as_array().unwrap().len(), 4);
    let v = call_json(&["basic-degrees", "--group", "symmetric:3"]);
    assert_eq!(v["basic_degrees"][1]["coeffs"], serde_json::json!([0, 0, -1, 1]));
    assert_eq!(v["basic_degrees"][2]["coeffs"], serde_json::json!([1, -2, 0, 1]));
    let v = call_json(&["irreps", "--group", "symmetric:3"]);
    assert_eq!(v["D"], serde_json::json!([[1, 1, 2], [1, 0, 1], [1, 1, 0], [1, 0, 0]]));
    let v = call_json(&["chartable", "--group", "symmetric:3"]);
    assert_eq!(keys(&v), ["classes", "degrees", "fs_types", "values"]);
    assert_eq!(v["degrees"], serde_json::json!([1, 1, 2]));
    let v = call_json(&["multable", "--group", "symmetric:3"]);
    assert_eq!(v["tensor"][1][1], serde_json::json!([1, 1, 0, 0]));
    let v = call_json(&["info", "--group", "alternating:4"]);
    assert_eq!(v["order"], 12);
    assert_eq!(v["subgroup_classes"], 5);
}

#[test]
fn csv_outputs() {
    let o = call(&["multable", "--group", "cyclic:2", "--format", "csv"]);
    assert_eq!(o.code, EXIT_OK);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(lines[0], "i,j,k,value");
    assert_eq!(lines.len(), 1 + 8);
    assert!(lines.contains(&"1,1,1,2"));
    let o = call(&["marks", "--group", "cyclic:2", "--format", "csv"]);
    assert_eq!(o.stdout, ",1.1,2.1\n1.1,2,1\n2.1,0,1\n");
}

#[test]
fn documents_are_deterministic() {
    for cmd in ["verify", "chartable", "irreps", "multable"] {
        let a = call(&[cmd, "--group", "dihedral:4", "--format", "json"]);
        let b = call(&[cmd, "--group", "dihedral:4", "--format", "json"]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn meta_block_only_on_request() {
    let v = call_json(&["marks", "--group", "cyclic:2"]);
    assert!(v.get("meta").is_none());
    let v = call_json(&["marks", "--group", "cyclic:2", "--meta"]);
    assert!(v["meta"]["version"].is_string());
}

#[test]
fn exit_codes_and_error_lines() {
    let o = call(&["marks"]);
    assert_eq!(o.code, EXIT_USAGE);
    assert_eq!(o.stderr.lines().count(), 1);
    assert_eq!(call(&["frobnicate", "--group", "cyclic:2"]).code, EXIT_USAGE);
    assert_eq!(call(&["factor", "--group", "cyclic:2"]).code, EXIT_USAGE);
    assert_eq!(call(&["marks", "--group", "cyclic:2", "--format", "xml"]).code, EXIT_USAGE);
    assert_eq!(call(&["--help"]).code, EXIT_OK);

    let o = call(&["marks", "--group", "nonsense:3"]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: UnknownSpec:"));
    let o = call(&["units", "--group", "product:dihedral:4*cyclic:2"]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: CapExceeded:"));
    assert_eq!(call(&["units", "--group", "product:dihedral:4*cyclic:2", "--max-classes", "30"]).code, EXIT_OK);
    let o = call(&["marks", "--group", "symmetric:5", "--max-order", "100"]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: GroupTooLarge:"));
    let o = call(&["factor", "--group", "symmetric:3", "--coeffs", "1,0,0,0"]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: NotAUnit:"));
    assert_eq!(call(&["factor", "--group", "symmetric:3", "--coeffs", "1,0"]).code, EXIT_COMPUTATION);
    assert_eq!(call(&["degree", "--group", "symmetric:3", "--mu", "1,x,0"]).code, EXIT_COMPUTATION);
}

#[test]
fn group_files_and_output_paths() {
    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("v4.json");
    std::fs::write(&group, r#"{"domain": 4, "generators": [[[1, 2], [3, 4]], [[1, 3], [2, 4]]], "name": "V4"}"#).unwrap();
    let spec = format!("file:{}", group.display());
    let out = dir.path().join("report.json");
    let o = call(&["verify", "--group", &spec, "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["group"], "V4");
    assert_eq!(v["units"], 16);

    std::fs::write(&group, r#"{"domain": 3, "generators": [[[1, 1]]]}"#).unwrap();
    let o = call(&["info", "--group", &spec]);
    assert_eq!(o.code, EXIT_COMPUTATION);
    assert!(o.stderr.starts_with("error: MalformedCycle:"));
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_burnside");
    let out = Command::new(bin)
        .args(["verify", "--group", "cyclic:3", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "SUCCESS");

    let out = Command::new(bin).args(["verify", "--group", "symmetric:4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_COUNTEREXAMPLE));

    let out = Command::new(bin).args(["marks"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
}
