use std::process::{Command, Output};

fn gposet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gposet")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mu_values() {
    let o = gposet(&["mu", "paths:1,1", "paths:4,4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    let o = gposet(&["mu", "K1", "house"]);
    assert_eq!(stdout(&o).lines().next(), Some("1"));
    let o = gposet(&["mu", "K3", "C5"]);
    let text = stdout(&o);
    assert!(text.starts_with("0\n") && text.contains("not an induced subgraph"), "{text}");
    let o = gposet(&["--format", "json", "mu", "bipartite:1,2", "bipartite:2,3"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["mu"], 1);
    assert_eq!(v["match"], true);
    let o = gposet(&["--connected", "mu", "K1", "P4"]);
    assert_eq!(stdout(&o).lines().next(), Some("0"));
}

#[test]
fn interval_exports() {
    let o = gposet(&["interval", "paths:1,1", "paths:4,4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 22);
    let o = gposet(&["interval", "C4", "Dv:C4"]);
    let text = stdout(&o);
    assert!(text.starts_with("size=15 ") && text.contains("interior_disconnected=true"), "{text}");
    let dot = stdout(&gposet(&["interval", "K1", "house", "--dot"]));
    assert!(dot.starts_with("graph interval"), "{dot}");
}

#[test]
fn experiments_and_strict_mode() {
    let o = gposet(&["--strict", "table2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agreement=true"));
    // The published zero proportions are not reproduced.
    let o = gposet(&["--strict", "zero-proportion", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gposet(&["zero-proportion", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = gposet(&["split-classify", "C4", "Dv:C4"]);
    assert!(stdout(&o).contains("strongly_zero_split"), "{}", stdout(&o));
    let o = gposet(&["morse", "paths:5,3", "paths:2,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("morse=-3"), "{}", stdout(&o));
    let o = gposet(&["conjectures", "schroder", "--bound", "3"]);
    assert!(o.status.success());
}

#[test]
fn errors() {
    assert_eq!(gposet(&["mu", "K1"]).status.code(), Some(1));
    assert_eq!(gposet(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gposet(&["mu", "path:x", "K2"]).status.code(), Some(1));
    let o = gposet(&["morse", "paths:6", "paths:1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("too large"));
    assert_eq!(gposet(&["--max-order", "4", "mu", "K1", "C5"]).status.code(), Some(1));
    assert!(gposet(&["--help"]).status.success());
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("gposet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mu.json");
    let o = gposet(&["--format", "json", "--out", path.to_str().unwrap(), "mu", "K1", "K3"]);
    assert!(o.status.success() && o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["mu"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
