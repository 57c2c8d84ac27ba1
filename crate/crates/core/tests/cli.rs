use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammacert"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn eval_prints_enclosures() {
    let o = run(&["eval", "F", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0.84556867019693"));

    let o = run(&["eval", "omega", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lo: f64 = v["lo"].as_str().unwrap().parse().unwrap();
    let hi: f64 = v["hi"].as_str().unwrap().parse().unwrap();
    assert!(lo <= std::f64::consts::PI && std::f64::consts::PI <= hi);

    let o = run(&["eval", "h2", "1"]);
    assert!(stdout(&o).contains("-134.10"));
}

#[test]
fn eval_domain_errors_exit_2() {
    let o = run(&["eval", "G", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
    assert_eq!(run(&["eval", "omega", "-3"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "omega_term", "2"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "nope", "1"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "lemma2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["overall"], "pass");
    assert_eq!(run(&["verify", "theorem9"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "theorem2", "--n-max", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "theorem1", "--grid-step", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn text_and_json_agree_on_statuses() {
    let args = ["verify", "theorem2", "--n-max", "40", "--grid-to", "5"];
    let text = stdout(&run(&args));
    let json = run(&[&args[..], &["--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    for step in v["steps"].as_array().unwrap() {
        let label = step["status"].as_str().unwrap().to_uppercase();
        let id = step["id"].as_str().unwrap();
        assert!(text.contains(&format!("[{label}] {id}:")), "{id}");
    }
    // the n_max flag reaches the sequence step
    assert!(text.contains("n = 3..40"));
}

#[test]
fn json_output_round_trips() {
    let o = run(&["verify", "remark1", "--format", "json", "--n-max", "30"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
}

#[test]
fn sequence_tables() {
    let o = run(&["sequence", "3", "20", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().skip(1).map(str::to_owned).collect();
    assert_eq!(rows.len(), 18);
    assert!(rows[1..].iter().all(|r| r.trim_end().ends_with('-')));

    let o = run(&["sequence", "2", "50", "inv_nlnn", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 49);
    assert!(rows[1..].iter().all(|r| r["diff"] == "-"));

    let o = run(&["sequence", "1", "5", "unit"]);
    let last = stdout(&o).lines().last().unwrap().to_owned();
    assert!(last.contains("5.26378901391"), "{last}");
    assert!(stdout(&o)
        .lines()
        .skip(2)
        .all(|r| r.trim_end().ends_with('+')));

    assert_eq!(
        run(&["sequence", "2", "10", "paper"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["sequence", "5", "5", "unit"]).status.code(), Some(2));
}

#[test]
fn report_all_writes_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bundle");
    let o = run(&[
        "report-all",
        "--out",
        out.to_str().unwrap(),
        "--n-max",
        "50",
        "--grid-to",
        "5",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    for name in ["lemma2", "theorem1", "theorem2", "remark1", "summary"] {
        assert!(out.join(format!("{name}.json")).exists(), "{name}");
    }
    let t2: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("theorem2.json")).unwrap()).unwrap();
    let step_i = t2["steps"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["id"] == "i")
        .unwrap();
    assert!(step_i["description"].as_str().unwrap().contains("3..50"));
    let summary: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(out.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["overall"], "pass");
}

#[test]
fn report_all_unwritable_destination_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain-file");
    std::fs::write(&file, "x").unwrap();
    let o = run(&["report-all", "--out", file.join("sub").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}
