use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Self {
        Sandbox { dir: tempfile::tempdir().unwrap() }
    }

    fn file(&self, name: &str, body: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p
    }

    fn cache(&self) -> PathBuf {
        self.dir.path().join("cache")
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_qmld"))
            .args(args)
            .env("QMLD_CACHE_DIR", self.cache())
            .output()
            .unwrap()
    }

    fn json(&self, args: &[&str]) -> (Value, i32) {
        let out = self.run(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let v = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{args:?}: {e}: {text}"));
        (v, out.status.code().unwrap())
    }
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const KLEIN: &str = r#"{"dimension": 3, "group": {"generators": [
    {"weights": {"d": 2, "e": [1, 1, 0]}}, {"weights": {"d": 2, "e": [0, 1, 1]}}]}}"#;
const TRIVIAL: &str = r#"{"dimension": 2, "group": {"generators": []}}"#;
const REFLECTION: &str = r#"{"dimension": 2, "group": {"generators": [{"weights": {"d": 2, "e": [1, 0]}}]}}"#;
const HALF: &str = r#"{"dimension": 2, "group": {"generators": [{"weights": {"d": 2, "e": [1, 1]}}]}}"#;
const THIRD: &str = r#"{"dimension": 2, "group": {"generators": [{"weights": {"d": 3, "e": [1, 1]}}]}}"#;
const BINARY_DIHEDRAL: &str = r#"{"dimension": 2, "ambient_order": 4, "group": {"generators": [
    {"perm": [1, 2], "exponents": [1, 3]}, {"perm": [2, 1], "exponents": [0, 2]}]}}"#;
const CUBIC: &str = r#"{"dimension": 3, "group": {"generators": [{"weights": {"d": 3, "e": [0, 1, 2]}}]},
    "equations": ["x1^3 + x2^3 + x3^3"]}"#;
const PIA: &str = r#"{"dimension": 2, "group": {"generators": []}, "equations": ["x1"],
    "ideal": [{"monomials": [[1, 0], [0, 1]], "exponent": "1/2"}]}"#;

#[test]
fn group_command() {
    let s = Sandbox::new();
    let (v, code) = s.json(&["group", path(&s.file("klein.json", KLEIN))]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["order"], 4);
    assert_eq!(v["details"]["conjugacy_classes"], 4);
    assert_eq!(v["details"]["ages"], serde_json::json!(["0/1", "1/1", "1/1", "1/1"]));
    assert_eq!(v["details"]["free_in_codim1"], true);

    let (v, _) = s.json(&["group", path(&s.file("trivial.json", TRIVIAL))]);
    assert_eq!(v["details"]["order"], 1);
    assert_eq!(v["details"]["free_in_codim1"], true);

    let (v, code) = s.json(&["group", path(&s.file("refl.json", REFLECTION))]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["free_in_codim1"], false);
    assert!(v["witness"]["pseudo_reflection"].is_string());
}

#[test]
fn mld_modes() {
    let s = Sandbox::new();
    let (v, code) = s.json(&["mld", path(&s.file("half.json", HALF)), "--mode", "quot"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "1/1");
    assert_eq!(v["status"], "exact");

    let (v, code) = s.json(&["mld", path(&s.file("bd.json", BINARY_DIHEDRAL)), "--mode", "reid-tai"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "1/1");

    let (v, code) = s.json(&["mld", path(&s.file("cubic.json", CUBIC)), "--mode", "hyperquot"]);
    assert_eq!(code, 0);
    let notes = v["witness"]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("thin")), "{v}");
    assert_eq!(v["budgets"]["m_max"], 6);
}

#[test]
fn verify_commands() {
    let s = Sandbox::new();
    let (v, code) = s.json(&["verify", "pia", path(&s.file("pia.json", PIA))]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["verdict"], "equal");
    assert_eq!(v["details"]["lhs"]["value"], "1/2");
    assert_eq!(v["details"]["rhs"]["value"], "1/2");

    let (v, code) = s.json(&["verify", "consistency", path(&s.file("third.json", THIRD))]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["verdict"], "equal");
    assert_eq!(v["value"], "2/3");

    let (v, code) = s.json(&["verify", "acc", "--dim", "2", "--max-order", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["oracle_match"], true);
    let values: Vec<&str> = v["details"]["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    // 1/5(1,1), 1/4(1,1), 1/5(1,2), 1/3(1,1), Du Val, smooth.
    assert_eq!(values, ["2/5", "1/2", "3/5", "2/3", "1/1", "2/1"]);

    let (v, code) = s.json(&["verify", "consistency", "--seed", "3", "--samples", "10"]);
    assert_eq!(code, 0);
    assert_eq!(v["arguments"]["seed"], 3);
    assert_eq!(v["details"]["mismatches"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    let s = Sandbox::new();
    let out = s.run(&["group", path(&s.file("bad.json", r#"{"dimension": 2, "group": {}, "colour": 1}"#))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));

    let out = s.run(&["group", path(&s.file("broken.json", "{\n  \"dimension\": 2,\n  \"group\": \n}"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let out = s.run(&["mld", path(&s.file("refl.json", REFLECTION)), "--mode", "quot"]);
    assert_eq!(out.status.code(), Some(1));

    let out = s.run(&["mld", path(&s.file("cubic.json", CUBIC)), "--mode", "quot"]);
    assert_eq!(out.status.code(), Some(1));

    let (v, code) = s.json(&["--no-cache", "mld", path(&s.file("cubic.json", CUBIC)), "--mode", "hyperquot", "--groebner-budget", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "lower_bound");
    assert_eq!(v["budgets"]["groebner_budget"], 0);
}

fn strip_timing(bytes: &[u8]) -> String {
    let mut v: Value = serde_json::from_slice(bytes).unwrap();
    v.as_object_mut().unwrap().remove("timing_ms");
    v.to_string()
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn output_is_deterministic() {
    let s = Sandbox::new();
    let cubic = s.file("cubic.json", CUBIC);
    let half = s.file("half.json", HALF);
    let cases: Vec<Vec<&str>> = vec![
        vec!["mld", path(&cubic), "--mode", "hyperquot"],
        vec!["mld", path(&half), "--mode", "quot"],
        vec!["verify", "acc", "--dim", "2", "--max-order", "7"],
    ];
    for args in cases {
        let cold = s.run(&args);
        let warm = s.run(&args);
        let off = s.run(&[args.clone(), vec!["--no-cache"]].concat());
        let cold = strip_timing(&cold.stdout);
        assert_eq!(cold, strip_timing(&warm.stdout), "{args:?}");
        assert_eq!(cold, strip_timing(&off.stdout), "{args:?}");
        let v: Value = serde_json::from_str(&cold).unwrap();
        assert!(!has_float(&v), "floating point in {cold}");
    }
}

#[test]
fn table_format() {
    let s = Sandbox::new();
    let out = s.run(&["--format", "table", "mld", path(&s.file("half.json", HALF))]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("value") && l.ends_with("1/1")), "{text}");
}
