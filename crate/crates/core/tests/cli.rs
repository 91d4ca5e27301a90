use std::process::{Command, Output};

const JORDAN: &str = r#"{"vertices": 1, "arrows": [[1]]}"#;
const TWO_LOOP: &str = r#"{"vertices": 1, "arrows": [[2]]}"#;

fn coha_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coha-lab"))
        .args(args)
        .env("COHA_LAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jordan_dt_table() {
    let out = coha_lab(&["--quiver", JORDAN, "--cmd", "dt", "--dmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().skip(2).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows[1], ["(1)", "1", "1", "true"]);
    for row in &rows[2..] {
        assert_eq!(&row[1..], ["0", "0", "true"]);
    }
}

#[test]
fn two_loop_verify_passes() {
    let out = coha_lab(&["--quiver", TWO_LOOP, "--cmd", "verify", "--dmax", "3", "--framing", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("overall: pass\n"));
}

#[test]
fn quiver_from_file() {
    let dir = std::env::temp_dir().join(format!("coha-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    std::fs::write(&path, TWO_LOOP).unwrap();
    let report = dir.join("report.json");
    let out = coha_lab(&[
        "--quiver",
        path.to_str().unwrap(),
        "--cmd",
        "span-framed",
        "--framing",
        "1",
        "--dmax",
        "4",
        "--weight-window",
        "-4",
        "--format",
        "json",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let d4 = v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["d"] == serde_json::json!([4]))
        .unwrap();
    assert_eq!(d4["saturated"], true);
    let total: u64 = d4["dims"]
        .as_object()
        .unwrap()
        .values()
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(total, 14);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn input_errors_exit_two() {
    let asym = coha_lab(&[
        "--quiver",
        r#"{"vertices": 2, "arrows": [[0, 1], [2, 0]]}"#,
        "--cmd",
        "dt",
    ]);
    assert_eq!(asym.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&asym.stderr).contains("not symmetric"));
    let malformed = coha_lab(&["--quiver", "{not json", "--cmd", "dt"]);
    assert_eq!(malformed.status.code(), Some(2));
    let missing = coha_lab(&["--quiver", "/nonexistent/q.json", "--cmd", "dt"]);
    assert_eq!(missing.status.code(), Some(2));
    let no_framing = coha_lab(&["--quiver", TWO_LOOP, "--cmd", "module-dims"]);
    assert_eq!(no_framing.status.code(), Some(2));
}

#[test]
fn failed_verification_exits_one() {
    let out = coha_lab(&[
        "--quiver",
        r#"{"vertices": 1, "arrows": [[3]]}"#,
        "--cmd",
        "verify",
        "--weight-window",
        "-10",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn output_is_deterministic_and_json_round_trips() {
    let two_vertex = r#"{"vertices": 2, "arrows": [[2, 1], [1, 2]]}"#;
    for cmd in [
        "dt",
        "char-coha",
        "char-module",
        "module-dims",
        "span-principal",
        "span-framed",
        "verify",
    ] {
        let args = [
            "--quiver",
            two_vertex,
            "--cmd",
            cmd,
            "--dmax",
            "2",
            "--framing",
            "1,1",
            "--format",
            "json",
        ];
        let first = coha_lab(&args);
        let second = coha_lab(&args);
        assert_eq!(
            first.status.code(),
            Some(0),
            "{cmd}: {}",
            String::from_utf8_lossy(&first.stderr)
        );
        assert_eq!(first.stdout, second.stdout, "{cmd} is not deterministic");
        let text = stdout(&first);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&parsed).unwrap() + "\n", text, "{cmd}");
    }
}
