use std::process::{Command, Output};

fn jd3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jd3"))
        .args(args)
        .output()
        .expect("spawn jd3")
}

fn code(args: &[&str]) -> i32 {
    jd3(args).status.code().expect("exit code")
}

const SMALL: [&str; 8] = [
    "--max-odd-legs",
    "9",
    "--max-even-legs",
    "6",
    "--max-lemma-d",
    "1",
    "--max-asym-d",
    "1",
];

#[test]
fn exit_codes() {
    let mut args = vec!["all"];
    args.extend(SMALL);
    assert_eq!(code(&args), 0);
    args.push("--corrupt-closed-form");
    assert_eq!(code(&args), 1);

    let out = jd3(&["all", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert!(out.stdout.is_empty());

    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["verify", "odd", "--max-legs", "-3"]), 2);
    assert_eq!(code(&["verify", "odd", "--threads", "0"]), 2);
    assert_eq!(code(&["verify", "asymptotics", "--regime", "three"]), 2);
}

#[test]
fn regime_arguments() {
    let base = ["verify", "asymptotics", "--max-d", "1"];
    let with = |extra: &[&str]| {
        let mut a = base.to_vec();
        a.extend(extra);
        code(&a)
    };
    assert_eq!(with(&["--regime", "one"]), 0);
    assert_eq!(with(&["--regime", "one", "--abc", "3", "2", "1/2"]), 0);
    assert_eq!(with(&["--abc", "2", "8/5", "1"]), 2);
    // (2, 8/5, 1) lies in the first regime only.
    assert_eq!(with(&["--regime", "two", "--abc", "2", "8/5", "1"]), 2);
    assert_eq!(with(&["--regime", "one", "--abc", "2", "x", "1"]), 2);
    assert_eq!(with(&["--regime", "one", "--abc", "2", "1"]), 2);
}

#[test]
fn json_and_csv_reports() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("even.json");
    let csv = dir.path().join("even.csv");
    let out = jd3(&[
        "verify",
        "even",
        "--max-legs",
        "12",
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("7 checks, 7 passed, 0 failed"));

    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["suite"], "even");
    assert_eq!(v["summary"]["total"], 7);
    let actual: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["actual"].as_str().unwrap())
        .collect();
    assert_eq!(actual, ["1", "1", "2", "3", "4", "5", "7"]);
    assert_eq!(v["checks"][6]["params"]["n"], 12);

    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,params,expected,actual,pass"));
    assert_eq!(lines.last(), Some("even.threeway.n=12,n=12,7,7,true"));
}

#[test]
fn json_to_stdout_and_thread_independence() {
    let run = |threads: &str| {
        let out = jd3(&[
            "verify",
            "lemma",
            "--max-d",
            "2",
            "--json",
            "--threads",
            threads,
        ]);
        assert_eq!(out.status.code(), Some(0));
        let mut v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        for c in v["checks"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let one = run("1");
    assert_eq!(one["summary"]["total"], 15);
    assert_eq!(one, run("3"));
}

#[test]
fn unwritable_output_is_a_usage_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("r.json");
    let out = jd3(&[
        "verify",
        "even",
        "--max-legs",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn dims_command() {
    let out = jd3(&["dims", "--parity", "odd", "--legs", "21"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tet  7"), "{text}");
    assert!(text.contains("quotient  0"), "{text}");
    assert!(text.contains("wtr  not computed; handled by reduction to tet"));

    let out = jd3(&["dims", "--parity", "even", "--legs", "12"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tet  7"), "{text}");
    assert!(text.contains("closed form  7"), "{text}");
    assert!(text.contains("tsq  not computed"), "{text}");

    assert_eq!(code(&["dims", "--parity", "even", "--legs", "13"]), 2);
    assert_eq!(code(&["dims", "--parity", "odd", "--legs", "4"]), 2);
    assert_eq!(code(&["dims", "--legs", "4"]), 2);
}
