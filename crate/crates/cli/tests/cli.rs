use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn mapsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mapsym")).args(args).env("MAPSYM_COLOR", "never").output().unwrap()
}

fn mapsym_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mapsym"))
        .args(args)
        .env("MAPSYM_COLOR", "never")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn generate(args: &[&str]) -> Vec<u8> {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    stdout(&mapsym(&full)).into_bytes()
}

#[test]
fn generated_maps_validate_from_stdin() {
    let cases: [&[&str]; 5] = [
        &["antiprism", "5"],
        &["prism", "4"],
        &["platonic", "cube"],
        &["platonic", "tetrahedron"],
        &["torus-grid", "3", "4"],
    ];
    for case in cases {
        let map = generate(case);
        let out = mapsym_stdin(&["validate", "--strict", "-"], &map);
        assert!(stdout(&out).starts_with("valid"), "{case:?}");
        for op in ["medial", "truncation", "dual"] {
            let derived = stdout(&mapsym_stdin(&["generate", op, "-"], &map));
            let out = mapsym_stdin(&["validate", "-"], derived.as_bytes());
            assert!(stdout(&out).starts_with("valid"), "{op} {case:?}");
        }
    }
}

#[test]
fn analyze_square_antiprism() {
    let map = generate(&["antiprism", "4"]);
    let text = stdout(&mapsym_stdin(&["analyze", "-"], &map));
    assert!(text.contains("4_Dd"));
    assert!(text.contains("v_4c"));
    assert!(!text.contains('\u{1b}'));
    let json: Value = serde_json::from_str(&stdout(&mapsym_stdin(&["analyze", "--json", "-"], &map))).unwrap();
    assert_eq!(json["schema"], "mapsym/1");
    assert_eq!(json["flags"], 64);
    assert_eq!(json["k"], 4);
    assert_eq!(json["aut_order"], 16);
    assert_eq!(json["type_name"], "4_Dd");
}

#[test]
fn colour_switch() {
    let map = generate(&["antiprism", "4"]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_mapsym"))
        .args(["analyze", "-"])
        .env("MAPSYM_COLOR", "always")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&map).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains('\u{1b}'));
}

#[test]
fn classify() {
    let map = generate(&["antiprism", "6"]);
    assert_eq!(stdout(&mapsym_stdin(&["classify", "-"], &map)), "4_Dd\n");
    let cube = generate(&["platonic", "cube"]);
    assert_eq!(stdout(&mapsym_stdin(&["classify", "-"], &cube)), "k=1 (not 4-orbit)\n");
}

#[test]
fn enumerate_types() {
    let text = stdout(&mapsym(&["enumerate-types", "--k", "4"]));
    assert!(text.starts_with("22 candidate"));
    assert_eq!(text.lines().count(), 23);
    let json: Value = serde_json::from_str(&stdout(&mapsym(&["enumerate-types", "--k", "2", "--json"]))).unwrap();
    assert_eq!(json["count"], 7);
}

#[test]
fn enumerate_maps() {
    let text = stdout(&mapsym(&["enumerate-maps", "--flags", "8"]));
    assert!(text.starts_with("11 flag systems"));
    let json: Value = serde_json::from_str(&stdout(&mapsym(&["enumerate-maps", "--flags", "4", "--json"]))).unwrap();
    assert_eq!(json["count"], 3);
    assert_eq!(json["maps"].as_array().unwrap().len(), 3);
}

#[test]
fn catalog_listing_and_dot() {
    let text = stdout(&mapsym(&["catalog"]));
    assert_eq!(text.lines().count(), 23);
    let dot = stdout(&mapsym(&["catalog", "--dot"]));
    assert_eq!(dot.matches("graph").count(), 22);
    let json: Value = serde_json::from_str(&stdout(&mapsym(&["catalog", "--json"]))).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 22);
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("antiprism.json");
    std::fs::write(&path, generate(&["antiprism", "5"])).unwrap();
    let dot = stdout(&mapsym(&["export-dot", path.to_str().unwrap()]));
    assert!(dot.contains("4_Dd"));
}

#[test]
fn invalid_input() {
    let bad = br#"{"flags":4,"s0":[1,0,3,2],"s1":[0,1,2,3],"s2":[2,3,0,1]}"#;
    let out = mapsym_stdin(&["validate", "-"], bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("s1 has 4 fixed points"));

    let out = mapsym_stdin(&["--error-json", "analyze", "-"], bad);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "invalid-flag-system");

    let out = mapsym_stdin(&["analyze", "-"], b"not json");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));

    let out = mapsym(&["analyze", "/nonexistent/map.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(mapsym(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(mapsym(&["catalog", "--dot", "--json"]).status.code(), Some(2));
    assert_eq!(mapsym(&["enumerate-types"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&mapsym(&["enumerate-maps", "--flags", "8", "--json"]));
    let b = stdout(&mapsym(&["enumerate-maps", "--flags", "8", "--json"]));
    assert_eq!(a, b);
    assert_eq!(generate(&["platonic", "icosahedron"]), generate(&["platonic", "icosahedron"]));
}
