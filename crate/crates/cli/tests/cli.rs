use std::process::{Command, Output};

fn twistop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistop")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn critical_values() {
    let o = twistop(&["critical", "--algebra", "full:1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1/4, 3/4");
    let o = twistop(&["critical", "--algebra", "spin:4"]);
    assert_eq!(stdout(&o).trim(), "3/8, 5/8");
    let o = twistop(&["critical", "--algebra", "sym:2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["critical"], serde_json::json!(["1/3", "2/3"]));
}

#[test]
fn verify_exit_codes() {
    let o = twistop(&["verify", "--algebra", "full:1", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = twistop(&["verify", "--algebra", "sym:2", "--suite", "critical", "--format", "text"]);
    assert!(stdout(&o).contains("λ = 1/3, 2/3"));
    let o = twistop(&["verify", "--algebra", "sym:9999"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank limit"));
    for bad in [&["verify", "--algebra", "nope:1"][..], &["verify", "--algebra", "full:1", "--suite", "x"], &["verify"]]
    {
        assert_eq!(twistop(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn text_and_json_agree() {
    let text = stdout(&twistop(&["verify", "--algebra", "spin:3", "--suite", "lemmas,critical", "--seed", "9"]));
    let o =
        twistop(&["verify", "--algebra", "spin:3", "--suite", "lemmas,critical", "--seed", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    for c in checks {
        let line = text.lines().find(|l| l.trim_start().starts_with(c["name"].as_str().unwrap())).unwrap();
        let status = if c["status"] == "pass" { "pass" } else { "FAIL" };
        assert!(line.contains(status), "{line}");
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("twistop-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = twistop(&[
        "verify",
        "--algebra",
        "full:1",
        "--suite",
        "ft",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["overall"], "pass");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn show_operators() {
    let o = twistop(&["show", "--algebra", "full:1", "--op", "p-:1"]);
    assert_eq!(stdout(&o).trim(), "(-1)*z * d1^2 + (-2)(L) * d1");
    let o = twistop(&["show", "--algebra", "full:1", "--op", "p-:1", "--lambda", "1/4"]);
    assert_eq!(stdout(&o).trim(), "(-1)*z * d1^2 + (-1/2) * d1");
    let o = twistop(&["show", "--algebra", "full:1", "--op", "p+:1"]);
    assert_eq!(stdout(&o).trim(), "(1)*z");
    assert_eq!(twistop(&["show", "--algebra", "full:1", "--op", "p-:5"]).status.code(), Some(2));
    assert_eq!(twistop(&["show", "--algebra", "full:1", "--op", "zz"]).status.code(), Some(2));
    assert_eq!(twistop(&["show", "--algebra", "full:1", "--op", "idem", "--lambda", "x"]).status.code(), Some(2));
}

#[test]
fn moyal_tables() {
    let o = twistop(&["moyal", "--max-degree", "4", "--check", "pairing"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Q(ξ³,ζ³) = 3/4"));
    let o = twistop(&["moyal", "--max-degree", "2", "--check", "components"]);
    assert!(stdout(&o).lines().any(|l| l == "C1(ζ,ξ) = -1/2"), "{}", stdout(&o));
    let o = twistop(&["moyal", "--check", "suite", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["overall"], "pass");
}

#[test]
fn algebra_listing() {
    let o = twistop(&["algebras", "list"]);
    let out = stdout(&o);
    assert!(out.contains("spin:5"));
    assert!(out.lines().any(|l| l.starts_with("full:3") && l.ends_with("5/12, 7/12")));
}
