use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const K4: &str = r#"{"vertices": 4, "rotations": [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]}"#;
const W5: &str = r#"{"vertices": 6, "rotations": [[1,2,3,4,5],[0,5,2],[0,1,3],[0,2,4],[0,3,5],[0,4,1]]}"#;
const W4: &str = r#"{"vertices": 5, "rotations": [[1,2,3,4],[0,4,2],[0,1,3],[0,2,4],[0,3,1]]}"#;

fn sipoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sipoly")).args(args).output().expect("binary runs")
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_counts_and_wheel() {
    let dir = TempDir::new().unwrap();
    let w5 = file(&dir, "w5.json", W5);
    let out = sipoly(&["check", arg(&w5)]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("V=6 E=10 F=6"), "{text}");
    assert!(text.contains("wheel: yes (rim 5)"), "{text}");
}

#[test]
fn check_accepts_adjacency_documents() {
    let dir = TempDir::new().unwrap();
    let cube =
        file(&dir, "cube.json", r#"{"adjacency": [[1,2,4],[0,3,5],[0,3,6],[1,2,7],[0,5,6],[1,4,7],[2,4,7],[3,5,6]]}"#);
    let out = sipoly(&["check", arg(&cube)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("V=8 E=12 F=6"));
}

#[test]
fn validation_failures_exit_one() {
    let dir = TempDir::new().unwrap();
    let truncated = file(&dir, "t.json", r#"{"vertices": 4, "rotations": [[1,"#);
    assert_eq!(sipoly(&["check", arg(&truncated)]).status.code(), Some(1));
    let square = file(&dir, "c4.json", r#"{"rotations": [[1,3],[2,0],[3,1],[0,2]]}"#);
    let out = sipoly(&["check", arg(&square)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a polyhedron"));
    let w4 = file(&dir, "w4.json", W4);
    assert_eq!(sipoly(&["reduce", arg(&w4)]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.json", K4);
    assert_eq!(sipoly(&["export", arg(&k4), "--format", "pdf"]).status.code(), Some(2));
    assert_eq!(sipoly(&["census", "--max-vertices", "3"]).status.code(), Some(2));
    assert_eq!(sipoly(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(sipoly(&["check", "/nonexistent/map.json"]).status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_sipoly"))
        .args(["census", "--max-vertices", "5"])
        .env("SIPOLY_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dual_round_trips_through_check() {
    let dir = TempDir::new().unwrap();
    let w5 = file(&dir, "w5.json", W5);
    let out = sipoly(&["dual", arg(&w5)]);
    assert_eq!(out.status.code(), Some(0));
    let d = file(&dir, "dual.json", &stdout(&out));
    assert!(stdout(&sipoly(&["check", arg(&d)])).contains("wheel: yes (rim 5)"));
}

#[test]
fn dualities_of_k4() {
    let dir = TempDir::new().unwrap();
    let k4 = file(&dir, "k4.json", K4);
    let all = stdout(&sipoly(&["dualities", arg(&k4)]));
    assert!(all.starts_with("24 duality"), "{all}");
    assert_eq!(all.lines().count(), 25);
    let strong = stdout(&sipoly(&["dualities", "--strong", arg(&k4)]));
    assert!(strong.starts_with("1 strong involution"), "{strong}");
}

#[test]
fn expand_then_reduce() {
    let dir = TempDir::new().unwrap();
    let w5 = file(&dir, "w5.json", W5);
    let out = stdout(&sipoly(&["expand", "--all", arg(&w5)]));
    assert!(out.contains("distinct result"), "{out}");

    let census = dir.path().join("c.json");
    let out = sipoly(&["census", "--max-vertices", "8", "--output", arg(&census)]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&census).unwrap()).unwrap();
    for entry in doc["entries"].as_array().unwrap() {
        let rotations: Vec<Vec<usize>> = decode_blocks(entry["code"].as_array().unwrap());
        let map = serde_json::json!({ "rotations": rotations }).to_string();
        let path = file(&dir, "entry.json", &map);
        let out = sipoly(&["reduce", "--trace", arg(&path)]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let rim: usize = text.lines().last().unwrap().split_whitespace().nth(4).unwrap().parse().unwrap();
        assert_eq!(rim % 2, 1, "{text}");
        assert_eq!(sipoly(&["squares", arg(&path)]).status.code(), Some(0));
    }
}

/// `[V, E, block, 0, block, 0, ...]` with 1-based neighbor labels.
fn decode_blocks(code: &[serde_json::Value]) -> Vec<Vec<usize>> {
    let nums: Vec<usize> = code.iter().map(|x| x.as_u64().unwrap() as usize).collect();
    nums[2..].split(|&x| x == 0).take(nums[0]).map(|block| block.iter().map(|&x| x - 1).collect()).collect()
}

#[test]
fn export_formats() {
    let dir = TempDir::new().unwrap();
    let w5 = file(&dir, "w5.json", W5);
    let dot = stdout(&sipoly(&["export", arg(&w5), "--format", "dot"]));
    assert_eq!(dot.matches(" -- ").count(), 10);
    let svg = stdout(&sipoly(&["export", arg(&w5), "--format", "svg"]));
    assert!(svg.starts_with("<svg"));
    let json = stdout(&sipoly(&["export", arg(&w5), "--format", "json"]));
    let again = file(&dir, "again.json", &json);
    assert!(stdout(&sipoly(&["check", arg(&again)])).contains("rim 5"));
}

#[test]
fn census_compare_to_nine() {
    let out = Command::new(env!("CARGO_BIN_EXE_sipoly"))
        .args(["census", "--max-vertices", "9", "--compare"])
        .env("SIPOLY_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("symmetric difference: empty"));
}

#[test]
fn census_is_deterministic() {
    let a = sipoly(&["census", "--max-vertices", "8"]);
    let b = Command::new(env!("CARGO_BIN_EXE_sipoly"))
        .args(["census", "--max-vertices", "8"])
        .env("SIPOLY_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let oracle = sipoly(&["census", "--max-vertices", "8", "--oracle"]);
    let doc: serde_json::Value = serde_json::from_slice(&oracle.stdout).unwrap();
    assert_eq!(doc["entries"].as_array().unwrap().len(), 5);
}
