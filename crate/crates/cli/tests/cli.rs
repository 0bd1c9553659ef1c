use std::process::{Command, Output};

use folkman_core::{to_graph6, Graph};
use serde_json::Value;

fn folkman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_folkman"))
        .args(args)
        .output()
        .expect("run folkman")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn manifest(out: &Output) -> Value {
    let err = String::from_utf8_lossy(&out.stderr);
    serde_json::from_str(err.lines().last().expect("manifest line")).expect("manifest json")
}

fn wheel() -> String {
    to_graph6(
        &Graph::complete(1)
            .unwrap()
            .join(&Graph::cycle(5).unwrap())
            .unwrap(),
    )
}

#[test]
fn wheel_arrows_three_twos() {
    let out = folkman(&[
        "arrows",
        "vertex",
        "--graph6",
        &wheel(),
        "--pattern",
        "2,2,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"]["arrows"], true);
    let m = manifest(&out);
    assert_eq!(m["subcommand"], "arrows");
    assert_eq!(m["exit_code"], 0);
}

#[test]
fn k5_does_not_edge_arrow() {
    let k5 = to_graph6(&Graph::complete(5).unwrap());
    let out = folkman(&["arrows", "edge", "--graph6", &k5, "--pattern", "3,3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["verdict"]["arrows"], false);
    assert_eq!(v["verdict"]["certificate"]["kind"], "edge_coloring");
}

#[test]
fn table_contains_known_row() {
    let out = folkman(&["table", "--r-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text
        .lines()
        .find(|l| l.starts_with("13,6,"))
        .expect("row r=13 k=6");
    let cells: Vec<&str> = row.split(',').collect();
    assert_eq!(cells[3], "27");
    assert_eq!(cells[4], "27");
}

#[test]
fn table_json_parses() {
    let out = folkman(&["table", "--r-max", "6", "--k-max", "2", "--format", "json"]);
    let rows = stdout_json(&out);
    // rows with r < k + 2 are omitted: 5 + 5 + 4 + 3
    assert_eq!(rows.as_array().unwrap().len(), 17);
}

#[test]
fn output_is_deterministic() {
    let args = ["mine", "--p", "5", "--n", "13", "--seed", "7"];
    let (a, b) = (folkman(&args), folkman(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(manifest(&a)["output_sha256"], manifest(&b)["output_sha256"]);
    assert_eq!(manifest(&a)["seed"], 7);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(folkman(&["--no-such-flag"]).status.code(), Some(2));
    assert_eq!(
        folkman(&["arrows", "vertex", "--graph6", "!!", "--pattern", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(folkman(&["construct", "dirac"]).status.code(), Some(2));
}

#[test]
fn refusals_exit_3() {
    // no (3,3)-graph on 6 vertices exists
    assert_eq!(
        folkman(&["mine", "--p", "3", "--n", "6"]).status.code(),
        Some(3)
    );
    assert_eq!(
        folkman(&["certify", "--pattern", "2,2", "--q", "3", "--n-cap", "14"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn certify_and_stream() {
    let dir = tempfile::tempdir().unwrap();
    let stream = dir.path().join("classes.jsonl");
    let out = folkman(&[
        "certify",
        "--pattern",
        "2,2",
        "--q",
        "3",
        "--n-cap",
        "7",
        "--stream",
        stream.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["certificate"]["value"], 5);
    let lines = std::fs::read_to_string(&stream).unwrap();
    let members = lines
        .lines()
        .filter(|l| l.contains("\"member\":true"))
        .count();
    assert_eq!(members, 1);
    let below = folkman(&["certify", "--pattern", "2,2,2", "--q", "3", "--n-cap", "8"]);
    assert_eq!(below.status.code(), Some(1));
}

#[test]
fn constructions_and_catalog() {
    let out = folkman(&["construct", "triple-c5", "--r", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let cert = &stdout_json(&out)["certificate"];
    assert_eq!(cert["verified"], true);
    assert_eq!(cert["measured"]["order"], 16);

    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().to_str().unwrap();
    assert_eq!(
        folkman(&["mine", "--p", "4", "--n", "8", "--catalog", cat])
            .status
            .code(),
        Some(0)
    );
    let found = folkman(&[
        "witness",
        "lookup",
        "--p",
        "4",
        "--n",
        "8",
        "--catalog",
        cat,
    ]);
    assert_eq!(found.status.code(), Some(0));
    let g6 = stdout_json(&found)["graph6"].as_str().unwrap().to_string();
    let verify = folkman(&["witness", "verify", "--graph6", &g6, "--p", "4", "--q", "3"]);
    assert_eq!(verify.status.code(), Some(0));
    let missing = folkman(&[
        "witness",
        "lookup",
        "--p",
        "5",
        "--n",
        "13",
        "--catalog",
        cat,
    ]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn out_file_and_manifest_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("inv.txt");
    let man_path = dir.path().join("run.json");
    let out = folkman(&[
        "--pretty",
        "--out",
        out_path.to_str().unwrap(),
        "--manifest",
        man_path.to_str().unwrap(),
        "invariants",
        "--graph6",
        "Dhc",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("chromatic_number: 3"));
    let m: Value = serde_json::from_str(&std::fs::read_to_string(&man_path).unwrap()).unwrap();
    assert_eq!(m["subcommand"], "invariants");
}
