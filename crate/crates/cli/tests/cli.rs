use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dessinum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dessinum")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dessinum(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn tree_o() -> String {
    let catalog = stdout(&["classify", "--catalog"]);
    let record: Value = catalog
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .find(|v| v["family"] == "O")
        .expect("catalog lists O");
    record["examples"][0].as_str().unwrap().to_string()
}

#[test]
fn bounds_weak_regime() {
    let v: Value = serde_json::from_str(&stdout(&["bounds", "--passport", "4 2|2^3"])).unwrap();
    assert_eq!(v["regime"], "WEAK");
    assert_eq!(v["min_deg_R"], 3);
    assert_eq!(v["d"], 2);
}

#[test]
fn rooted_count() {
    assert_eq!(stdout(&["count", "--rooted", "--weight", "4"]).trim(), "36");
}

#[test]
fn enumerate_lines_and_round_trip() {
    let listing = stdout(&["enumerate", "--passport", "7 1|2^3 1^2"]);
    assert_eq!(listing.lines().count(), 6);
    assert_eq!(listing, stdout(&["enumerate", "--passport", "7 1|2^3 1^2", "--jobs", "4"]));

    let mut child = Command::new(env!("CARGO_BIN_EXE_dessinum"))
        .args(["invariants", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(listing.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let records: Vec<Value> =
        String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 6);
    for (line, record) in listing.lines().zip(&records) {
        let input: Value = serde_json::from_str(line).unwrap();
        assert_eq!(input["code"], record["code"]);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(dessinum(&["bounds", "--passport", "4 2|2^"]).status.code(), Some(2));
    assert_eq!(dessinum(&["render", "--tree", "root=B; x1 y2"]).status.code(), Some(2));
    assert_eq!(dessinum(&["construct", "--passport", "2 2|2 2"]).status.code(), Some(1));
    assert_eq!(dessinum(&["render", "--implicit-white", "--tree", "root=B; x1 y1"]).status.code(), Some(1));
}

#[test]
fn render_single_edge() {
    let dot = stdout(&["render", "--tree", "root=B; x3 y3"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("shape=circle").count(), 2);
    assert_eq!(dot.matches(" -> ").count(), 1);
    assert!(dot.contains("label=\"3\""));
}

#[test]
fn render_tree_o() {
    let o = tree_o();
    let dot = stdout(&["render", "--tree", &o]);
    assert_eq!(dot.matches("fillcolor=black").count(), 4);
    assert_eq!(dot.matches("fillcolor=white").count(), 10);
    assert_eq!(dot.matches("label=\"2\"").count(), 7);
    let implicit = stdout(&["render", "--implicit-white", "--tree", &o]);
    assert_eq!(implicit.matches("shape=circle").count(), 4);
    let svg = stdout(&["render", "--format", "svg", "--seed", "3", "--tree", &o]);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg, stdout(&["render", "--format", "svg", "--seed", "3", "--tree", &o]));
}

#[test]
fn classify_and_transform() {
    let o = tree_o();
    let v: Value = serde_json::from_str(&stdout(&["classify", "--tree", &o])).unwrap();
    assert_eq!(v["family"], "O");
    let swapped: Value = serde_json::from_str(&stdout(&["transform", "color-swap", "--tree", &o])).unwrap();
    let back: Value =
        serde_json::from_str(&stdout(&["transform", "color-swap", "--tree", swapped["code"].as_str().unwrap()]))
            .unwrap();
    assert_eq!(back["code"], o);
    let moves = stdout(&["transform", "sts-moves", "--tree", "root=B; x1 x2 y2 x1 y1 y1"]);
    assert!(moves.lines().all(|l| l.contains("\"same_passport\":true")));
}

#[test]
fn orbit_report_flags_mirror_pair() {
    let v: Value = serde_json::from_str(&stdout(&["orbit-report", "--passport", "3^10|2^15"])).unwrap();
    assert_eq!(v["trees"], 4);
    assert_eq!(v["class_sizes"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["classes"][1]["mirror_pair"], true);
}

#[test]
fn selftest_single_criterion() {
    let out = stdout(&["selftest", "--criterion", "1"]);
    assert!(out.contains("criterion  1 PASS"));
}

#[test]
fn catalog_file_is_current() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/unitree_catalog.jsonl");
    let stored = std::fs::read_to_string(path).expect("catalog file exists");
    assert_eq!(stored, stdout(&["classify", "--catalog"]), "regenerate with `dessinum classify --catalog`");
}
