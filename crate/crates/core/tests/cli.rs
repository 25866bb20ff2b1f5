use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn reskit(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_reskit"));
    cmd.args(args).env_remove("RESKIT_LIMIT");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn generated(name: &str, family: &[&str]) -> String {
    let path = scratch(name);
    let p = path.to_str().unwrap();
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", p]);
    let o = reskit(&args, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    p.to_string()
}

#[test]
fn fries_on_anthracene() {
    let file = generated("anthracene.json", &["polyacene", "3"]);
    let o = reskit(&["fries", &file], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("2"));
}

#[test]
fn daisy_on_anthracene_and_fibonaccene() {
    let file = generated("anthracene-daisy.json", &["polyacene", "3"]);
    let o = reskit(&["daisy", &file], &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("not a daisy cube"), "{text}");
    assert!(text.contains("down-set closure"), "{text}");

    let file = generated("fib4.json", &["fibonaccene", "4"]);
    let o = reskit(&["daisy", &file], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("daisy cube: idim 4"));
}

#[test]
fn resonance_with_dot() {
    let file = generated("f3.json", &["fibonaccene", "3"]);
    let dot = scratch("f3.dot");
    let o = reskit(&["resonance", &file, "--dot", dot.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(5), Some(5)));
    let dot = std::fs::read_to_string(dot).unwrap();
    assert!(dot.contains("label=\"000\"") && dot.contains("color=red"));
}

#[test]
fn analyze_reports_structure() {
    let file = generated("coronene.json", &["coronene"]);
    let o = reskit(&["analyze", &file], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["finite_faces"], 7);
    assert_eq!(v["outerplane"], false);
    assert_eq!(v["peripheral_coloring"]["colorable"], false);
    assert!(v["adjacent_triples"]["unavailable"].is_string());
}

#[test]
fn verify_exit_codes() {
    let o = reskit(&["verify", "--corpus", "chains:6"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["disagreements"], 0);

    let o = reskit(&["verify", "--corpus", "empty"], &[]);
    assert_eq!(o.status.code(), Some(0));

    let o = reskit(&["verify", "--corpus", "chains:4", "--limit", "2"], &[]);
    assert_eq!(o.status.code(), Some(3));
    let o = reskit(&["verify", "--corpus", "bogus"], &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn limit_from_environment() {
    let file = generated("fib5.json", &["fibonaccene", "5"]);
    let o = reskit(&["fries", &file], &[("RESKIT_LIMIT", "4")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("more than 4"));
    let o = reskit(&["fries", &file, "--limit", "100"], &[("RESKIT_LIMIT", "4")]);
    assert_eq!(o.status.code(), Some(0));
    let o = reskit(&["fries", &file], &[("RESKIT_LIMIT", "many")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let missing = scratch("missing.json");
    let o = reskit(&["fries", missing.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));

    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"format_version\": \"1\", \"vertices\": [{\"id\": 0}]}").unwrap();
    let o = reskit(&["analyze", bad.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("vertex"), "{}", stderr(&o));

    let o = reskit(&["generate", "chain", "LLLL", "-o", scratch("x.json").to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("overlaps"));
}

#[test]
fn outputs_are_deterministic() {
    let a = generated("det-a.json", &["chain", "LSR"]);
    let b = generated("det-b.json", &["chain", "LSR"]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let x = stdout(&reskit(&["analyze", &a], &[]));
    let y = stdout(&reskit(&["analyze", &b], &[]));
    assert_eq!(x, y);
}
