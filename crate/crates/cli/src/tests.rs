use std::path::{Path, PathBuf};

use serde_json::Value;

use super::*;

/// Exit code and stdout of one invocation.
fn qgor(args: &[&str]) -> (u8, String) {
    let cli = match Cli::try_parse_from(std::iter::once("qgor").chain(args.iter().copied())) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => return (0, String::new()),
        Err(_) => return (1, String::new()),
    };
    match run(&cli) {
        Ok(text) => (0, text),
        Err(e) => (e.code as u8, e.message),
    }
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn session(name: &str) -> String {
    corpus().join(name).display().to_string()
}

#[test]
fn qgcheck_json_envelope() {
    let f = session("twoplanes.qg");
    let (code, out) = qgor(&["qgcheck", "-f", &f, "--seq", "s", "--json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["budgets", "command", "inputs", "result", "seed", "timings_ms", "tool", "version"]);
    assert_eq!(v["tool"], "qgor");
    assert_eq!(v["result"]["quasi_gorenstein"], false);
    assert_eq!(v["result"]["mu_omega"], 2);
    assert_eq!(v["timings_ms"], serde_json::json!({}));
}

#[test]
fn json_output_is_byte_identical() {
    let f = session("cubic.qg");
    let a = qgor(&["qgcheck", "-f", &f, "--json", "--seed", "3"]);
    let b = qgor(&["qgcheck", "-f", &f, "--json", "--seed", "3"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn text_output_lists_limit_closure() {
    let f = session("twoplanes.qg");
    let (code, text) = qgor(&["limit-closure", "-f", &f, "--seq", "s"]);
    assert_eq!(code, 0);
    assert!(text.contains("t_stab: 1"), "{text}");
}

#[test]
fn exit_codes() {
    let f = session("twoplanes.qg");
    assert_eq!(qgor(&["qgcheck", "-f", &f, "--tmax", "0"]).0, 2);
    assert_eq!(qgor(&["qgcheck", "-f", "/nonexistent.qg"]).0, 1);
    assert_eq!(qgor(&["frobnicate", "-f", &f]).0, 1);
    assert_eq!(qgor(&["qgcheck"]).0, 1);
    assert_eq!(qgor(&["qgcheck", "-f", &f, "--window", "0"]).0, 1);
    assert_eq!(qgor(&["gb", "-f", &f, "--ring", "Nope"]).0, 1);
    assert_eq!(qgor(&["gb", &f]).0, 1);
    assert_eq!(qgor(&["--help"]).0, 0);
}

#[test]
fn session_errors_report_positions() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.qg");
    std::fs::write(&f, "ring R = QQ[x,y];\nideal I = x^2 + z;\n").unwrap();
    let (code, err) = qgor(&["gb", "-f", f.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains(":2:"), "{err}");
}

fn copy_corpus(to: &Path) {
    for e in std::fs::read_dir(corpus()).unwrap() {
        let p = e.unwrap().path();
        std::fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

#[test]
fn corpus_passes_and_detects_corruption() {
    let dir = tempfile::tempdir().unwrap();
    copy_corpus(dir.path());
    let d = dir.path().to_str().unwrap();
    let (code, table) = qgor(&["corpus", d]);
    assert_eq!(code, 0, "{table}");
    assert!(table.contains(" 0 failures"));

    let sidecar = dir.path().join("twoplanes.expect.json");
    let text = std::fs::read_to_string(&sidecar).unwrap();
    assert!(text.contains("\"mu_omega\": 2"));
    std::fs::write(&sidecar, text.replace("\"mu_omega\": 2", "\"mu_omega\": 1")).unwrap();
    assert_eq!(qgor(&["corpus", d]).0, 1);
    let summary = run_corpus(dir.path(), &Options::default()).unwrap();
    assert!(!summary.failures.is_empty());
    assert!(summary.failures.iter().all(|f| f.starts_with("twoplanes")));
}

#[test]
fn corpus_without_sidecar_fails() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(corpus().join("regular.qg"), dir.path().join("regular.qg")).unwrap();
    assert_eq!(qgor(&["corpus", dir.path().to_str().unwrap()]).0, 1);
}
