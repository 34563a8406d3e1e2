use std::process::{Command, Output};

fn min3gen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_min3gen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = min3gen(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn order_examples() {
    assert_eq!(stdout(&min3gen(&["order", "--relators", "R(2,3,5)"])).trim(), "120");
    assert_eq!(stdout(&min3gen(&["order", "--relators", "a|a^2"])).trim(), "2");
    let felsch = min3gen(&["order", "--relators", "R(3,3,3) + (a*b^c)^4", "--strategy", "felsch"]);
    assert_eq!(stdout(&felsch).trim(), "96");
    let v = json(&["order", "--relators", "R(2,3,4)", "--format", "json"]);
    assert_eq!((v["schema"].as_u64(), v["order"].as_u64()), (Some(1), Some(48)));
}

#[test]
fn order_overflow_and_parse_errors() {
    let o = min3gen(&["order", "--relators", "a,b|a^2", "--max-cosets", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow at 10 cosets"));
    assert_eq!(min3gen(&["order", "--relators", "a,b|a^"]).status.code(), Some(2));
    assert_eq!(min3gen(&["order", "--relators", "R(2,3)"]).status.code(), Some(2));
    assert_eq!(min3gen(&["order", "--relators", "R(2,3,5)", "--strategy", "magic"]).status.code(), Some(2));
}

#[test]
fn classify_rows() {
    let v = json(&["classify", "--row", "333-4", "--format", "json"]);
    let row = &v["rows"][0];
    assert_eq!(row["report"]["members"], serde_json::json!(["S3", "S4"]));
    assert_eq!(row["matches"], true);
    let v = json(&["classify", "--row", "244-5", "--format", "json"]);
    assert_eq!(v["rows"][0]["report"]["order"], 200);
    assert_eq!(v["rows"][0]["report"]["members"], serde_json::json!(["D8"]));
    assert_eq!(min3gen(&["classify", "--row", "999"]).status.code(), Some(2));
    assert_eq!(min3gen(&["classify"]).status.code(), Some(2));
}

#[test]
fn classify_custom_presentation() {
    let v = json(&["classify", "--relators", "R(2,3,3)", "--klm", "2,3,3", "--format", "json"]);
    assert_eq!(v["rows"][0]["report"]["members"], serde_json::json!(["S4"]));
    assert!(v["rows"][0]["matches"].is_null());
}

#[test]
fn dihedral_audit_and_dump() {
    let o = min3gen(&["dihedral", "--type", "all"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("M7 ok")).count(), 9);
    assert!(!text.contains("FAIL"));
    assert_eq!(min3gen(&["dihedral", "--type", "7A"]).status.code(), Some(2));
    let dumped = stdout(&min3gen(&["dihedral", "--type", "2A", "--dump"]));
    let golden = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden/dihedral_2A.json"))
        .unwrap();
    assert_eq!(dumped, golden);
}

#[test]
fn shapes_examples() {
    let v = json(&["shapes", "--group", "S4", "--orbits", "1", "--format", "json"]);
    let mut got: Vec<(String, u64)> = v["systems"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (s["axes"].as_str().unwrap().to_string(), s["shape_count"].as_u64().unwrap()))
        .collect();
    got.sort();
    assert_eq!(got, [("12".to_string(), 2), ("6".to_string(), 4)]);
    let v = json(&["shapes", "--group", "1", "--orbits", "3", "--format", "json"]);
    assert_eq!(v["systems"][0]["shape_count"], 8);
    let v = json(&["shapes", "--group", "A5", "--orbits", "1", "--format", "json"]);
    assert_eq!(v["systems"][0]["shape_count"], 4);
    assert_eq!(min3gen(&["shapes", "--group", "M24", "--orbits", "1"]).status.code(), Some(2));
    assert_eq!(min3gen(&["shapes", "--group", "S4", "--orbits", "4"]).status.code(), Some(2));
}

#[test]
fn shapes_summary_csv() {
    let o = min3gen(&["shapes", "--group", "GL(2,3)", "--summary"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
    let o = min3gen(&["shapes", "--group", "S4", "--orbits", "3", "--summary"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,axes,shapes,consistent,dedup,choices"));
    let mut counts: Vec<&str> = lines.map(|l| l.split(',').nth(2).unwrap()).collect();
    counts.sort();
    assert_eq!(counts, ["16", "2", "64"]);
}

#[test]
fn audits_pass() {
    assert!(min3gen(&["audit-theorem1"]).status.success());
    let o = min3gen(&["kp-check"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("5^(1+2):2"));
    assert_eq!(min3gen(&["kp-check", "--p", "4"]).status.code(), Some(2));
}

#[test]
fn out_file_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let o = min3gen(&["dihedral", "--format", "json", "--seed", "11", "--out", path.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
        std::fs::read(path).unwrap()
    };
    let (a, b) = (run("a.json"), run("b.json"));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!((v["schema"].as_u64(), v["seed"].as_u64()), (Some(1), Some(11)));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(min3gen(&[]).status.code(), Some(2));
    assert_eq!(min3gen(&["frobnicate"]).status.code(), Some(2));
}
