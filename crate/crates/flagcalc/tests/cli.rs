use std::process::{Command, Output};

fn flagcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagcalc")).args(args).env_remove("FLAGCALC_MAX_RANK").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn act_prints_canonical_form() {
    let o = flagcalc(&["act", "--type", "A", "--rank", "2", "--gen", "1", "O[2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-e[1,0]*O[1] - O[2] + (1-e[1,1])*O[2,1]\n");
    let o = flagcalc(&["act", "--gen", "1", "O[1]"]);
    assert_eq!(stdout(&o), "O[1]\n");
}

#[test]
fn act_is_linear() {
    let o = flagcalc(&["act", "--gen", "1", "e[1,0]*O[] + O[1]"]);
    assert_eq!(stdout(&o), "-e[1,0]*O[] + (1+e[1,0]-e[2,0])*O[1]\n");
    // the column of O[] alone
    let id = stdout(&flagcalc(&["act", "--gen", "1", "O[]"]));
    assert_eq!(id, "-O[] + (1-e[1,0])*O[1]\n");
}

#[test]
fn act_in_other_bases() {
    let o = flagcalc(&["act", "--gen", "1", "FP[]"]);
    assert_eq!(stdout(&o), "-e[1,0]*FP[1]\n");
    let o = flagcalc(&["act", "--gen", "1", "I[1]"]);
    assert_eq!(stdout(&o), "(1+e[1,0])*I[] + e[1,0]*I[1]\n");
    let o = flagcalc(&["act", "--rank", "1", "--gen", "1", "X[1]"]);
    assert_eq!(stdout(&o), "X[1]\n");
    let o = flagcalc(&["act", "--rank", "1", "--gen", "1", "X[]"]);
    assert_eq!(stdout(&o), "-X[] - 2*w1*X[1]\n");
}

#[test]
fn restrict_rank_one() {
    assert_eq!(stdout(&flagcalc(&["--rank", "1", "restrict", "O[]"])), "id: 1-e[1]\ns1: 0\n");
    assert_eq!(stdout(&flagcalc(&["--rank", "1", "restrict", "O[1]"])), "id: 1\ns1: 1\n");
}

#[test]
fn restrict_vanishes_outside_bruhat_interval() {
    let out = stdout(&flagcalc(&["restrict", "O[1,2]"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.contains(&"s2s1: 0"));
    assert!(lines.contains(&"s1s2s1: 0"));
    assert!(lines.iter().filter(|l| !l.ends_with(": 0")).count() == 4);
}

#[test]
fn matrix_formats() {
    let o =
        flagcalc(&["matrix", "--type", "A", "--rank", "2", "--gen", "1", "--basis", "schubert", "--format", "ascii"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["O[2,1]", "0", "0", "1-e[1,1]", "e[0,1]", "1", "0"]));
    let o = flagcalc(&["matrix", "--rank", "1", "--gen", "1", "--basis", "fixed", "--format", "csv"]);
    assert_eq!(stdout(&o), ",FP[],FP[1]\nFP[],0,-e[-1]\nFP[1],-e[1],0\n");
    let o = flagcalc(&["matrix", "--rank", "1", "--gen", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["type"], "A");
    assert_eq!(v["order"], serde_json::json!(["e", "1"]));
    assert_eq!(v["entries"][1][0], serde_json::json!([{"c": [1], "w": [0]}, {"c": [-1], "w": [1]}]));
    for basis in ["ideal", "coh"] {
        assert_eq!(flagcalc(&["matrix", "--gen", "2", "--basis", basis]).status.code(), Some(0));
    }
    assert_eq!(flagcalc(&["matrix", "--gen", "1", "--no-check"]).status.code(), Some(0));
}

#[test]
fn verify_suites() {
    let o = flagcalc(&["verify", "--type", "A", "--rank", "2", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = flagcalc(&["verify", "--type", "A", "--rank", "1", "--suite", "chevalley"]);
    assert!(stdout(&o).contains("PASS L(a1)*O[1] = e[-1]*O[1] - (1+e[-1])*O[]"));
    let o = flagcalc(&["verify", "--type", "B", "--rank", "2", "--suite", "theorem41"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("C_i"));
    let o = flagcalc(&["verify", "--type", "G", "--rank", "2", "--suite", "sln"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("SKIP"));
}

#[test]
fn usage_errors_exit_two() {
    let o = flagcalc(&["act", "--gen", "1", "O[1] + e[1]*O[2]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("O[1] + e[1]*O[2]\n         ^"), "{}", stderr(&o));
    for args in [
        &["act", "--gen", "1", "O[1,1]"][..],
        &["act", "--gen", "3", "O[1]"],
        &["matrix", "--gen", "1", "--basis", "nope"],
        &["matrix", "--type", "E", "--rank", "6", "--gen", "1"],
        &["matrix", "--type", "G", "--rank", "3", "--gen", "1"],
        &["restrict", "X[1]"],
        &["frobnicate"],
    ] {
        assert_eq!(flagcalc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn rank_cap_from_environment() {
    let run = |cap: &str, args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_flagcalc")).args(args).env("FLAGCALC_MAX_RANK", cap).output().unwrap()
    };
    assert_eq!(run("1", &["matrix", "--gen", "1"]).status.code(), Some(2));
    assert_eq!(run("2", &["matrix", "--gen", "1"]).status.code(), Some(0));
    assert_eq!(run("many", &["matrix", "--gen", "1"]).status.code(), Some(2));
    assert_eq!(run("9", &["--rank", "6", "matrix", "--gen", "1"]).status.code(), Some(2));
}
