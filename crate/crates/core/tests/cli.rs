use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn edgecode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgecode"))
        .args(args)
        .env_remove("EDGECODE_MAX_MESSAGES")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stderr).expect("stderr is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn params_of_path() {
    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"length\":16,\"dimension\":3}\n");
}

#[test]
fn mindist_of_cycle() {
    let out = edgecode(&["mindist", "--q", "3", "--family", "cycle", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["distance"], 16);
    assert_eq!(v["search_space"], 121);
    assert_eq!(v["witness"].as_array().unwrap().len(), 5);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn gen_interval() {
    let out = edgecode(&["gen", "--family", "interval", "--n", "3", "--d1", "2", "--d2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn export_csv_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = write(dir.path(), "p4.json", r#"{"vertices": 4, "edges": [[1,2],[2,3],[3,4]]}"#);
    let out = edgecode(&["export", "--q", "3", "--hypergraph", &p4, "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<Vec<u32>> = stdout(&out)
        .lines()
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    // points of {1,2}^4 in lexicographic order, products computed mod 3
    let points: Vec<[u32; 4]> = (0..16)
        .map(|k| [k >> 3 & 1, k >> 2 & 1, k >> 1 & 1, k & 1].map(|b| b + 1))
        .collect();
    let expected: Vec<Vec<u32>> = [(0, 1), (1, 2), (2, 3)]
        .iter()
        .map(|&(a, b)| points.iter().map(|p| p[a] * p[b] % 3).collect())
        .collect();
    assert_eq!(rows, expected);

    let again = edgecode(&["export", "--q", "3", "--hypergraph", &p4, "--format", "csv"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn export_json_shape() {
    let out = edgecode(&["export", "--q", "4", "--family", "path", "--n", "3"]);
    let v = json(&out);
    assert_eq!(v["q"], 4);
    assert_eq!(v["s"], 3);
    assert_eq!(v["point_order"], "lex-canonical");
    let m = v["matrix"].as_array().unwrap();
    assert_eq!(m.len(), 2);
    assert_eq!(m[0].as_array().unwrap().len(), 27);
}

#[test]
fn csv_only_for_export() {
    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gram_over_f4() {
    let out = edgecode(&["gram", "--q", "4", "--family", "path", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["self_orthogonal"], true);
    let out = edgecode(&["gram", "--q", "3", "--family", "path", "--n", "4"]);
    assert_eq!(json(&out)["self_orthogonal"], false);
}

#[test]
fn weights_are_worker_independent() {
    let base = ["weights", "--q", "3", "--family", "table3", "--n", "1"];
    let one = edgecode(&[&base[..], &["--workers", "1"]].concat());
    let three = edgecode(&[&base[..], &["--workers", "3"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    let v = json(&one);
    let total: u64 = v["counts"].as_object().unwrap().values().map(|c| c.as_u64().unwrap()).sum();
    assert_eq!(total, 3u64.pow(10));
}

#[test]
fn full_enumeration_agrees() {
    let base = ["mindist", "--q", "4", "--family", "cycle", "--n", "5"];
    let proj = json(&edgecode(&base));
    let full = json(&edgecode(&[&base[..], &["--full-enumeration"]].concat()));
    assert_eq!(proj["distance"], full["distance"]);
    assert_eq!(proj["witness"], full["witness"]);
    assert_eq!(full["search_space"], 4u64.pow(5) - 1);
}

#[test]
fn verify_table1_passes() {
    let out = edgecode(&["verify", "--suite", "table1", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["suite"], "table1");
    assert_eq!(v["summary"]["pass"], 4);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["cases"][0]["match"], true);
}

#[test]
fn verify_table3_reports_the_bowtie() {
    let out = edgecode(&["verify", "--suite", "table3", "--q", "3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["summary"]["pass"], 20);
    assert_eq!(v["summary"]["fail"], 1);
    let row = v["cases"].as_array().unwrap().iter().find(|c| c["id"] == "table3/row11").unwrap();
    assert_eq!(row["predicted"], 16);
    assert_eq!(row["actual"], 12);
    assert_eq!(row["match"], false);
}

#[test]
fn verify_resumes_from_progress() {
    let dir = tempfile::tempdir().unwrap();
    let progress = dir.path().join("progress.jsonl");
    let progress = progress.to_str().unwrap();
    let first = edgecode(&["verify", "--suite", "table2", "--q", "3", "--progress", progress]);
    assert_eq!(first.status.code(), Some(0));
    let lines = std::fs::read_to_string(progress).unwrap();
    assert_eq!(lines.lines().count(), 8);

    // a truncated trailing line is ignored
    std::fs::write(progress, format!("{lines}{{\"suite\":\"tab")).unwrap();
    let second = edgecode(&["verify", "--suite", "table2", "--q", "3", "--progress", progress]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let after = std::fs::read_to_string(progress).unwrap();
    assert_eq!(after.lines().filter(|l| l.ends_with('}')).count(), 8);
}

#[test]
fn out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("params.json");
    let out = edgecode(&[
        "params", "--q", "5", "--family", "star", "--n", "4", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "{\"length\":256,\"dimension\":3}\n");
}

#[test]
fn usage_errors_exit_2() {
    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let e = error_json(&out);
    assert_eq!(e["error"], "usage");
    assert!(e["message"].as_str().unwrap().contains("Usage:"));

    let out = edgecode(&["params", "--q", "6", "--family", "path", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_json(&out)["message"].as_str().unwrap().contains("not a prime power"));

    let out = edgecode(&["params", "--q", "3", "--family", "interval", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = edgecode(&["verify", "--suite", "nonsense", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_hypergraph_file() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"vertices\": 3,\n \"edges\": [[1, 2], [2, ]]}");
    let out = edgecode(&["params", "--q", "3", "--hypergraph", &bad]);
    assert_eq!(out.status.code(), Some(2));
    let e = error_json(&out);
    assert_eq!(e["error"], "parse");
    assert!(e["message"].as_str().unwrap().contains("line 2"));

    let out_of_range = write(dir.path(), "range.json", r#"{"vertices": 3, "edges": [[1, 4]]}"#);
    let out = edgecode(&["params", "--q", "3", "--hypergraph", &out_of_range]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    let out = edgecode(&["params", "--q", "3", "--hypergraph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_json(&out)["error"], "io");
}

#[test]
fn resource_limits_exit_3() {
    let args = ["mindist", "--q", "3", "--family", "path", "--n", "4"];
    let out = edgecode(&[&args[..], &["--max-messages", "12"]].concat());
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_json(&out)["error"], "resource_limit");

    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4", "--max-points", "15"]);
    assert_eq!(out.status.code(), Some(3));

    let env_limited = Command::new(env!("CARGO_BIN_EXE_edgecode"))
        .args(args)
        .env("EDGECODE_MAX_MESSAGES", "12")
        .output()
        .unwrap();
    assert_eq!(env_limited.status.code(), Some(3));

    let flag_wins = Command::new(env!("CARGO_BIN_EXE_edgecode"))
        .args(args)
        .args(["--max-messages", "13"])
        .env("EDGECODE_MAX_MESSAGES", "12")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
    assert_eq!(json(&flag_wins)["distance"], 8);
}

#[test]
fn zero_limits_are_rejected() {
    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4", "--max-points", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = edgecode(&["params", "--q", "3", "--family", "path", "--n", "4", "--workers", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
