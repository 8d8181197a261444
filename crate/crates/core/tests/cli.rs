use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bso-motivic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dims_bo3_json() {
    let o = run(&[
        "dims",
        "--group",
        "bo:3",
        "--max-degree",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    let top = entries
        .iter()
        .find(|e| e["degree"] == 4 && e["twist"] == 4)
        .unwrap();
    assert_eq!(top["dim"], 4);
    assert!(entries.iter().all(|e| e["torsion_dim"] == 0));
}

#[test]
fn weight_of_top_class() {
    let o = run(&["weight", "--group", "bso:6", "--class", "w6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "4");
}

#[test]
fn qop_prints_monomial_basis() {
    let o = run(&["qop", "--k", "0", "--n", "4", "--class", "m[1,1,1]"]);
    assert_eq!(stdout(&o).trim(), "m[2,1,1]");
}

#[test]
fn verify_theorem_succeeds() {
    let o = run(&["verify", "theorem", "--m", "2", "--max-degree", "20"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn kernel_table_matches_closed_form() {
    let o = run(&[
        "kernel",
        "--m",
        "3",
        "--max-degree",
        "10",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "BSO_6,6,3,1,1"));
    assert!(text.lines().any(|l| l == "BSO_6,6,4,1,1"));
}

#[test]
fn failing_check_exits_1() {
    let o = run(&["verify", "comparison", "--m", "2", "--max-degree", "8"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bad_input_exits_2() {
    for args in [
        vec!["dims"],
        vec!["dims", "--group", "bq:3"],
        vec!["weight", "--group", "bo:3", "--class", "w2*"],
        vec!["qop", "--k", "0", "--n", "0", "--class", "w1"],
        vec!["nonsense"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn writes_golden_table_to_env_dir() {
    let dir = std::env::temp_dir().join(format!("bso-motivic-cli-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_bso-motivic"))
        .args([
            "dims",
            "--group",
            "bso:4",
            "--max-degree",
            "8",
            "--format",
            "csv",
            "--write",
        ])
        .env("MOTIVIC_BSO_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("bso_4.csv")).unwrap();
    assert_eq!(written, stdout(&o));
    std::fs::remove_dir_all(&dir).ok();
}
