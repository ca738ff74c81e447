use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn sta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sta")).args(args).output().expect("spawn sta")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn constant_term(amp: &str) -> Value {
    json!({ "monomial": [0, 0, 0, 0], "amp": amp })
}

fn field(blades: Value) -> Value {
    json!({ "signature": "1,3", "ring": "rational", "blades": blades })
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let p = dir.join(name);
    fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn verify_is_deterministic() {
    let a = sta(&["verify", "all", "--seed", "7", "--count", "4"]);
    let b = sta(&["verify", "all", "--seed", "7", "--count", "4"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);

    let report = stdout_json(&a);
    assert_eq!(report["suite"], "all");
    assert_eq!(report["seed"], 7);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
    assert_eq!(report["summary"]["fail"], 0);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = sta(&["verify", "hertz", "--seed", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "hertz");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}

#[test]
fn unknown_suite_is_usage_error() {
    let out = sta(&["verify", "optics"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("optics"));
}

#[test]
fn wrong_magnetic_sign_fails_with_residual() {
    let out = sta(&["verify", "bosonize", "--count", "5", "--flip-magnetic-sign"]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    let check = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "bosonize.massless_theorem").unwrap();
    assert_eq!(check["status"], "fail");
    assert_eq!(check["residual"]["signature"], "1,3");
    assert!(!check["residual"]["blades"].as_array().unwrap().is_empty());
}

#[test]
fn generate_every_kind() {
    for kind in ["rest-solution", "null-plane-wave", "superpotential", "hertz-rest", "random-field"] {
        let out = sta(&["generate", kind, "--seed", "2"]);
        assert_eq!(code(&out), 0, "{kind}: {}", String::from_utf8_lossy(&out.stderr));
        let doc = stdout_json(&out);
        assert_eq!(doc["signature"], "1,3", "{kind}");
        assert_eq!(doc["ring"], "rational", "{kind}");
    }
}

#[test]
fn generate_rejects_bad_parameters() {
    let out = sta(&["generate", "null-plane-wave", "--k", "1,0,0,2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not null"));

    let out = sta(&["generate", "rest-solution", "--mass", "-1/2"]);
    assert_eq!(code(&out), 2);

    let out = sta(&["generate", "rest-solution", "--mass", "one"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generate_rest_solution_shape() {
    let out = sta(&["generate", "rest-solution", "--mass", "3/2"]);
    let doc = stdout_json(&out);
    let blades: Vec<&str> = doc["blades"].as_array().unwrap().iter().map(|b| b["blade"].as_str().unwrap()).collect();
    assert_eq!(blades, ["b0000", "b0110"]);
    let scalar = &doc["blades"][0]["terms"][0];
    assert_eq!(scalar["trig"], "cos");
    assert_eq!(scalar["k"][0], "3/2");
}

#[test]
fn fermionize_constant_field() {
    let dir = tempfile::tempdir().unwrap();
    let f = field(json!([{ "blade": "b0011", "terms": [constant_term("1/1")] }]));
    let path = write(dir.path(), "f.json", &f);
    let out = sta(&["transcribe", "fermionize", "--in", &path]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    assert_eq!(doc["direction"], "fermionize");
    assert_eq!(doc["residual_zero"], true);
    assert_eq!(doc["outputs"]["Psi"]["ring"], "complex-rational");
}

#[test]
fn fermionize_field_with_electric_current() {
    let dir = tempfile::tempdir().unwrap();
    let f = field(json!([{ "blade": "b0011", "terms": [{ "monomial": [0, 1, 0, 0], "amp": "1/1" }] }]));
    let je = field(json!([{ "blade": "b0001", "terms": [constant_term("1/1")] }]));
    let bundle = json!({ "fields": { "F": f, "Je": je } });
    let path = write(dir.path(), "bundle.json", &bundle);
    let out = sta(&["transcribe", "fermionize", "--in", &path]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["residual_zero"], true);

    // without the current the same field is not a solution
    let bundle = json!({ "fields": { "F": bundle["fields"]["F"].clone() } });
    let path = write(dir.path(), "bare.json", &bundle);
    let out = sta(&["transcribe", "fermionize", "--in", &path]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["residual_zero"], false);
}

#[test]
fn bosonize_generated_solution() {
    let dir = tempfile::tempdir().unwrap();
    let psi = dir.path().join("psi.json");
    let out = sta(&["generate", "null-plane-wave", "--k", "2,0,0,2", "--out", psi.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = sta(&["transcribe", "bosonize", "--in", psi.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc = stdout_json(&out);
    assert_eq!(doc["residual_zero"], true);
    for key in ["F", "Je", "Jm"] {
        assert!(doc["outputs"].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn bosonize_rejects_odd_field() {
    let dir = tempfile::tempdir().unwrap();
    let f = field(json!([{ "blade": "b0001", "terms": [constant_term("1/1")] }]));
    let path = write(dir.path(), "odd.json", &f);
    let out = sta(&["transcribe", "bosonize", "--in", &path]);
    assert_eq!(code(&out), 2);
}

#[test]
fn malformed_documents_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = dir.path().join("broken.json");
    fs::write(&bad_json, "{ \"signature\": ").unwrap();
    let out = sta(&["transcribe", "bosonize", "--in", bad_json.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let f = field(json!([{ "blade": "b0000", "terms": [constant_term("1/0")] }]));
    let path = write(dir.path(), "zero_den.json", &f);
    let out = sta(&["transcribe", "bosonize", "--in", &path]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("amp"));

    let mut f = field(json!([]));
    f["signature"] = json!("3,1");
    let path = write(dir.path(), "signature.json", &f);
    let out = sta(&["transcribe", "bosonize", "--in", &path]);
    assert_eq!(code(&out), 2);

    let out = sta(&["transcribe", "bosonize", "--in", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn generate_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("random.json");
    let out = sta(&["generate", "random-field", "--seed", "11", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let first = fs::read_to_string(&path).unwrap();
    let again = sta(&["generate", "random-field", "--seed", "11"]);
    assert_eq!(first.as_bytes(), &again.stdout[..]);
}
