use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lielocder")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let v =
        serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (code(&out), v)
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("lielocder-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn validate_exit_codes() {
    assert_eq!(code(&run(&["validate", "--algebra", "ex3.1-L2"])), 0);
    let (c, v) = json(&["validate", "--algebra", "ex4.6", "--json"]);
    assert_eq!(c, 2);
    assert_eq!(v["results"]["validation"]["valid"], false);
    assert!(!v["results"]["validation"]["jacobi_failures"].as_array().unwrap().is_empty());
    assert_eq!(code(&run(&["validate", "--algebra", "/no/such/file.lie"])), 64);
}

#[test]
fn corrupted_table_lists_jacobi_failure() {
    // Heisenberg with a derivation that breaks Jacobi
    let path = temp_file("broken.lie", "basis x y z w\n[x, y] = z\n[w, x] = x\n[w, y] = 2*y\n[w, z] = z\n");
    let out = run(&["validate", "--algebra", &path]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stdout).contains("JacobiFailure"));
    let path = temp_file("syntax.lie", "basis a b\n[a, b] = = a\n");
    let out = run(&["analyze", "--algebra", &path]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&run(&["analyze"])), 64);
    assert_eq!(code(&run(&["frobnicate"])), 64);
    assert_eq!(code(&run(&["analyze", "--algebra", "no-such-entry"])), 64);
    assert_eq!(code(&run(&["analyze", "--algebra", "ex3.1-L1", "--seed", "x"])), 64);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn analyze_three_dim() {
    let (c, v) = json(&["analyze", "--algebra", "ex3.1-L1", "--json"]);
    assert_eq!(c, 0);
    let a = &v["results"]["analysis"];
    assert_eq!(a["der_dim"], 6);
    assert_eq!(a["locder"]["verdict"], "CertifiedEqual");

    let (c, v) = json(&["analyze", "--algebra", "ex3.1-L2", "--json"]);
    assert_eq!(c, 0);
    let a = &v["results"]["analysis"];
    assert_eq!(a["der_dim"], 4);
    assert_eq!(a["locder"]["verdict"], "CertifiedProper");
    let cert = &a["certificates"][0];
    assert_eq!(cert["is_derivation"], false);
    assert_eq!(cert["images"][2], "Δ(e3) = 2*e3");
    assert_eq!(a["oracle"]["locder_dim"], 5);
}

#[test]
fn analyze_jordan_block() {
    let (c, v) = json(&["analyze", "--algebra", "jordan:2^3", "--json"]);
    assert_eq!(c, 0);
    let a = &v["results"]["analysis"];
    assert_eq!(a["locder"]["verdict"], "CertifiedProper");
    for case in a["certificates"][0]["jordan"]["cases"].as_array().unwrap() {
        assert!(case["residual"].as_array().unwrap().iter().all(|r| r == "0"));
        assert_eq!(case["spot_checks"], 100);
    }
}

#[test]
fn analyze_over_finite_field() {
    let path = temp_file("l2mod5.lie", "field F_5\nbasis e1 e2 e3\n[e2, e1] = e2 + e3\n[e3, e1] = e3\n");
    let (c, v) = json(&["analyze", "--algebra", &path, "--json"]);
    assert_eq!(c, 0);
    let a = &v["results"]["analysis"];
    assert_eq!(a["locder"]["verdict"], "ExactModP");
    assert_eq!(a["locder"]["exact_dim"], 5);
    assert_eq!(a["certificates"][0]["kind"], "exhaustive");
    assert_eq!(v["algebra"]["source"], "file");
    assert_eq!(v["algebra"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn prime_policy_in_analyze() {
    let (c, v) = json(&["analyze", "--algebra", "ex3.1-L1", "--prime", "3", "--json"]);
    assert_eq!(c, 0);
    assert_eq!(v["results"]["analysis"]["oracle"]["status"], "declined");
    let (_, v) = json(&["analyze", "--algebra", "ex3.1-L1", "--prime", "7", "--json"]);
    assert_eq!(v["results"]["analysis"]["oracle"]["prime"], 7);
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("timings");
        serde_json::to_string(&v).unwrap()
    };
    for name in ["ex3.1-L2", "model:3,1", "solvmodel:2,1"] {
        let args = ["analyze", "--algebra", name, "--seed", "17", "--json"];
        let (_, a) = json(&args);
        let (_, b) = json(&args);
        assert_eq!(strip(a.clone()), strip(b), "{name}");
        assert_eq!(a["schema"], 1);
        assert_eq!(a["seed"], 17);
        assert!(a["timings"].is_object());
    }
}

#[test]
fn reproduce_declines_small_prime() {
    let (c, v) = json(&["reproduce", "--prime", "3", "--algebra", "model:3,1", "--json"]);
    assert_eq!(c, 1);
    let rows = v["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["id"] == "oracle:model:3,1").unwrap();
    assert_eq!(row["status"], "ORACLE-DECLINED");
    let row7 = rows.iter().find(|r| r["id"] == "7").unwrap();
    assert_eq!(row7["status"], "ORACLE-DECLINED");
}

#[test]
fn conjecture_defaults() {
    let (c, v) = json(&["conjecture", "--json"]);
    assert_eq!(c, 0);
    assert!(v["candidates"].as_array().unwrap().is_empty());
    let cases = v["cases"].as_array().unwrap();
    for name in ["solvmodel:2,1", "solvmodel:3,1", "solvmodel:2,2,1", "ex4.5"] {
        let case = cases.iter().find(|c| c["name"] == name).unwrap();
        assert_eq!(case["verdict"], "CertifiedEqual", "{name}");
    }
    assert_eq!(v["skipped"][0]["name"], "ex4.6");
}
