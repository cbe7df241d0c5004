use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobrw")).args(args).env_remove("FROBRW_SEED").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn parse_reports_types() {
    let o = run(&["parse", "--sig", &data("cmon.sig"), "--term", "(eta + id[1]) ; mu", "--check-type", "1", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("w -> w"));
}

#[test]
fn type_errors_exit_one_with_json() {
    let o = run(&["parse", "--sig", &data("cmon.sig"), "--term", "mu ; mu"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stderr(&o).trim()).unwrap();
    assert!(v["kind"].is_string() && v["message"].is_string());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["reduce", "--strategy", "sideways"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn interp_output_feeds_export() {
    let out = tmp("fg.json");
    let o = run(&["interp", "--sig", &data("fg.sig"), "--term", "(f ; g) + (f ; g)", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["export", "--sig", &data("fg.sig"), "--in", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let a: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn rewrite_lists_both_matches() {
    let o = run(&["rewrite", "--sig", &data("fg.sig"), "--rules", &data("fg.rules"), "--term", "(f ; g) + (f ; g)", "--list-matches"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["rule"], "lr");
    assert_eq!(v["matches"].as_array().unwrap().len(), 2);
}

#[test]
fn rewrite_reaches_the_identity() {
    let o = run(&["rewrite", "--sig", &data("fg.sig"), "--rules", &data("fg.rules"), "--term", "(f ; g) + (f ; g)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
}

#[test]
fn ib_reduction_checks_semantics() {
    let o = run(&["reduce", "--strategy", "ib", "--sig", &data("ib.sig"), "--in", &data("existential.json"), "--check-semantics"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("semantics preserved"));
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["--seed", "17", "rewrite", "--sig", &data("fg.sig"), "--rules", &data("fg.rules"), "--term", "(f ; g) + (f ; g) + (f ; g)", "--pick", "random"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let o = run(&["--seed", "5", "normalize-upsilon", "--sig", &data("ib.sig"), "--term", "chg[b,r] ; chg[r,b]", "--order", "random"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn finite_model_semantics() {
    let o = run(&["semantics", "--sig", &data("group.sig"), "--term", "(id[1] + i) ; m", "--model", &format!("finite:{}", data("z3.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v.to_string();
    assert!(text.contains("[0,1,2]") && text.contains("[2,2,0]"), "{text}");
}
