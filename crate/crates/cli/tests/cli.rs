use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cylkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cylkit"))
        .args(args)
        .env_remove("CYLKIT_CACHE")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--output", "json"];
    full.extend_from_slice(args);
    let out = cylkit(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(args: &[&str]) -> i32 {
    cylkit(args).status.code().expect("exit code")
}

#[test]
fn expand_worked_example() {
    let v = json(&["expand", "--n", "6", "--word", "5,3,1,4,2,0"]);
    assert_eq!(v["word"], "531420");
    let terms = v["terms"].as_array().unwrap();
    let table: Vec<(String, i64)> = terms
        .iter()
        .map(|t| (t["word"].as_str().unwrap().to_string(), t["coeff"].as_i64().unwrap()))
        .collect();
    assert_eq!(
        table,
        vec![
            ("345210".into(), 1),
            ("540510".into(), 1),
            ("405210".into(), 2),
            ("105210".into(), 1)
        ]
    );
}

#[test]
fn expand_single_generator() {
    let v = json(&["expand", "--n", "4", "--word", "0"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([1]));
    assert_eq!(v["terms"][0]["coeff"], 1);
}

#[test]
fn expand_text_is_deterministic() {
    let a = cylkit(&["expand", "--n", "5", "--word", "0,2,4,1,3"]);
    let b = cylkit(&["expand", "--n", "5", "--word", "0,2,4,1,3"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["expand", "--n", "3", "--word", "9"]), 2);
    assert_eq!(code(&["expand", "--n", "3", "--word", "00"]), 2);
    assert_eq!(code(&["expand", "--n", "3", "--bogus"]), 2);
    assert_eq!(code(&["expand", "--n", "3", "--word", "0121", "--cap", "2"]), 3);
    assert_eq!(code(&["cylindric", "--m", "2", "--n", "4", "--lambda", "2,2", "--d", "3", "--cap", "5"]), 3);
    assert_eq!(code(&["gw", "--m", "2", "--n", "4", "--lambda", "3"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope"]), 2);
}

#[test]
fn cylindric_outputs() {
    let v = json(&["cylindric", "--m", "3", "--n", "6"]);
    assert_eq!(v["terms"], serde_json::json!([{"partition": [], "e": 0, "coeff": 1}]));
    let v = json(&["cylindric", "--m", "3", "--n", "6", "--lambda", "2,1", "--d", "1", "--mu", "2,1"]);
    assert_eq!(v["skew_word"].as_str().unwrap().len(), 6);
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    let v = json(&["cylindric", "--m", "2", "--n", "4", "--lambda", "2,1", "--mu", "1"]);
    assert_eq!(
        v["terms"],
        serde_json::json!([{"partition": [1, 1], "e": 0, "coeff": 1}, {"partition": [2], "e": 0, "coeff": 1}])
    );
}

#[test]
fn gw_outputs() {
    let v = json(&["gw", "--m", "3", "--n", "6", "--lambda", "2,1", "--d", "1", "--mu", "2,1", "--nu", "3,2,1"]);
    assert_eq!(v["value"], 2);
    assert_eq!(v["toric_oracle"]["agrees"], true);
    let v = json(&["gw", "--m", "2", "--n", "4", "--lambda", "1", "--nu", "2"]);
    assert_eq!(v["value"], 0);
    assert_eq!(v["degree_check"]["ok"], false);
    let text = String::from_utf8(cylkit(&["gw", "--m", "2", "--n", "4", "--lambda", "1", "--nu", "2"]).stdout).unwrap();
    assert!(text.contains("mismatch"));
}

#[test]
fn verify_selected_suites() {
    let out = cylkit(&["verify", "--suite", "example2", "--suite", "dual-pieri", "--n", "3", "--maxlen", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(": PASS")).count(), 2);
}

fn corpus(path: &Path, n: &str, maxlen: &str) -> Output {
    cylkit(&["corpus", "--n", n, "--maxlen", maxlen, "--cache", path.to_str().unwrap()])
}

#[test]
fn corpus_is_deterministic_and_resumable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.jsonl"), dir.path().join("b.jsonl"));
    assert!(corpus(&a, "3", "4").status.success());
    assert!(corpus(&b, "3", "4").status.success());
    let full = fs::read(&a).unwrap();
    assert_eq!(full, fs::read(&b).unwrap());
    let text = String::from_utf8(full.clone()).unwrap();
    let header: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(header["maxlen"], 4);

    let keep: String = text.split_inclusive('\n').take(7).collect();
    fs::write(&b, keep).unwrap();
    let out = corpus(&b, "3", "4");
    assert!(String::from_utf8_lossy(&out.stdout).contains("6 cached"));
    assert_eq!(fs::read(&b).unwrap(), full);
}

#[test]
fn corpus_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    assert!(corpus(&path, "3", "3").status.success());
    let text = fs::read_to_string(&path).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[3] = "{\"window\": [1,";
    fs::write(&path, lines.join("\n") + "\n").unwrap();
    let out = corpus(&path, "3", "3");
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let other = dir.path().join("d.jsonl");
    assert!(corpus(&other, "3", "3").status.success());
    assert_eq!(corpus(&other, "3", "4").status.code(), Some(2));
}

#[test]
fn cache_env_overrides_flag() {
    let dir = tempfile::tempdir().unwrap();
    let (env_path, flag_path) = (dir.path().join("env.jsonl"), dir.path().join("flag.jsonl"));
    let out = Command::new(env!("CARGO_BIN_EXE_cylkit"))
        .args(["corpus", "--n", "3", "--maxlen", "2", "--cache", flag_path.to_str().unwrap()])
        .env("CYLKIT_CACHE", &env_path)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(env_path.exists());
    assert!(!flag_path.exists());
}
