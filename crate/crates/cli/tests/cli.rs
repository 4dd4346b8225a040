use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn p6c4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p6c4"))
        .args(args)
        .env_remove("P6C4_CATALOG_DIR")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn certify_wheel_names_obstruction() {
    let dir = tempfile::tempdir().unwrap();
    let w5 = write(dir.path(), "w5.json", r#"{"n":6,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4],[0,5],[1,5],[2,5],[3,5],[4,5]]}"#);
    let o = p6c4(&["color", "--k", "3", "--in", &w5, "--certify"]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\"W5\""), "{}", stdout(&o));
}

#[test]
fn colors_five_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.g6", "Dhc\n");
    let o = p6c4(&["color", "--k", "3", "--in", &c5, "--certify", "--strict"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("colored"), "{}", stdout(&o));
}

#[test]
fn strict_refuses_four_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3],[3,0]]}"#);
    let o = p6c4(&["color", "--k", "3", "--in", &c4, "--certify", "--strict"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn enumerates_four_obstructions() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k3.g6");
    let o = p6c4(&["enumerate", "--mode", "critical", "--k", "3", "--max-n", "10", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let lines = fs::read_to_string(&out).unwrap();
    assert_eq!(lines.lines().count(), 4);
    let manifest = fs::read_to_string(dir.path().join("k3.json")).unwrap();
    assert!(manifest.contains("\"n_max_searched\": 10"), "{manifest}");
}

#[test]
fn nae_gadget_check() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "one.json", r#"{"n":3,"clauses":[[1,2,3]]}"#);
    let out = dir.path().join("g.g6");
    let o = p6c4(&["reduce", "nae", "--instance", &inst, "--out", out.to_str().unwrap(), "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let g = p6c4::from_graph6(fs::read_to_string(&out).unwrap().trim()).unwrap();
    assert_eq!(g.order(), 29);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["satisfiable"], true);
    assert_eq!(report["colorable"], true);
    assert!(dir.path().join("g.json").exists());
}

#[test]
fn exit_codes_for_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(p6c4(&["color"]).status.code(), Some(64));
    assert_eq!(p6c4(&["detect", "--pattern", "Q9", "--in", "x"]).status.code(), Some(64));
    let bad = write(dir.path(), "bad.g6", "not graph6 \u{7f}\n");
    assert_eq!(p6c4(&["color", "--k", "3", "--in", &bad]).status.code(), Some(65));
    let missing = dir.path().join("missing.g6");
    assert_eq!(p6c4(&["color", "--k", "3", "--in", missing.to_str().unwrap()]).status.code(), Some(66));
}
