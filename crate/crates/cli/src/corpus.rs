//! Corpus runner: every `NAME.qg` session in a directory is paired with a
//! `NAME.expect.json` sidecar listing commands and expected result fields.
//!
//! ```json
//! { "checks": [ { "command": "qgcheck", "ring": "R", "seq": ["s"],
//!                 "expect": { "quasi_gorenstein": false, "socle_sequence.0": 1 } } ] }
//! ```
//!
//! Expectation keys are dotted paths into the command's `result` object;
//! numeric segments index arrays.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::commands::{run_command, Command, Options};
use crate::session::parse_session;
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Check {
    pub command: Command,
    #[serde(default)]
    pub ring: Option<String>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default)]
    pub seq: Vec<String>,
    #[serde(default)]
    pub index: Option<usize>,
    #[serde(default)]
    pub power: Option<u32>,
    #[serde(default)]
    pub count: Option<u32>,
    #[serde(default)]
    pub degree: Option<u32>,
    pub expect: BTreeMap<String, Value>,
}

pub fn parse_expectations(text: &str) -> Result<Expectations, String> {
    let e: Expectations = serde_json::from_str(text).map_err(|e| e.to_string())?;
    for (k, c) in e.checks.iter().enumerate() {
        if c.command == Command::Corpus {
            return Err(format!("check {k}: corpus checks cannot nest"));
        }
        if c.expect.is_empty() {
            return Err(format!("check {k}: empty expectation"));
        }
        if let Some(bad) = c.expect.keys().find(|p| p.is_empty() || p.split('.').any(str::is_empty)) {
            return Err(format!("check {k}: malformed path `{bad}`"));
        }
    }
    Ok(e)
}

/// Field of `v` at a dotted path.
pub fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, seg| match cur {
        Value::Object(map) => map.get(seg),
        Value::Array(items) => seg.parse::<usize>().ok().and_then(|i| items.get(i)),
        _ => None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub command: String,
    pub ring: Option<String>,
    pub passed: bool,
    pub mismatches: Vec<String>,
    pub result: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub passed: bool,
    pub error: Option<String>,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub entries: Vec<EntryReport>,
    pub total_checks: usize,
    /// One line per failed check or entry.
    pub failures: Vec<String>,
}

impl CorpusSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `name  checks  status` table.
    pub fn table(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
        let mut out = format!("{:<width$}  checks  status\n", "ring");
        for e in &self.entries {
            let status = if e.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{:<width$}  {:>6}  {status}\n", e.name, e.checks.len()));
        }
        for f in &self.failures {
            out.push_str(&format!("  {f}\n"));
        }
        out.push_str(&format!("{} checks, {} failures\n", self.total_checks, self.failures.len()));
        out
    }
}

fn check_options(base: &Options, c: &Check) -> Options {
    Options {
        ring: c.ring.clone(),
        ideals: c.ideal.clone(),
        seqs: c.seq.clone(),
        index: c.index.or(base.index),
        power: c.power.unwrap_or(base.power),
        count: c.count.unwrap_or(base.count),
        degree: c.degree.unwrap_or(base.degree),
        timings: false,
        budgets: base.budgets,
    }
}

fn run_entry(session_path: &Path, base: &Options) -> EntryReport {
    let name = session_path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
    let fail = |error: String| EntryReport { name: name.clone(), passed: false, error: Some(error), checks: Vec::new() };
    let text = match std::fs::read_to_string(session_path) {
        Ok(t) => t,
        Err(e) => return fail(format!("cannot read session: {e}")),
    };
    let session = match parse_session(&text) {
        Ok(s) => s,
        Err(e) => return fail(format!("session: {e}")),
    };
    let sidecar = session_path.with_file_name(format!("{name}.expect.json"));
    let expectations = match std::fs::read_to_string(&sidecar) {
        Ok(t) => match parse_expectations(&t) {
            Ok(e) => e,
            Err(e) => return fail(format!("sidecar: {e}")),
        },
        Err(_) => return fail(format!("missing sidecar {name}.expect.json")),
    };
    let checks: Vec<CheckReport> = expectations
        .checks
        .iter()
        .map(|c| {
            let opts = check_options(base, c);
            let (result, mut mismatches) = match run_command(&session, c.command, &opts) {
                Ok(out) => (out.report["result"].clone(), Vec::new()),
                Err(e) => (Value::Null, vec![format!("error (exit {}): {}", e.code, e.message)]),
            };
            if !result.is_null() {
                for (path, want) in &c.expect {
                    match lookup(&result, path) {
                        Some(got) if got == want => {}
                        Some(got) => mismatches.push(format!("{path}: expected {want}, got {got}")),
                        None => mismatches.push(format!("{path}: expected {want}, missing")),
                    }
                }
            }
            CheckReport { command: c.command.name().into(), ring: c.ring.clone(), passed: mismatches.is_empty(), mismatches, result }
        })
        .collect();
    EntryReport { passed: checks.iter().all(|c| c.passed), name, error: None, checks }
}

/// Runs every session in `dir` (sorted by file name, in parallel) and
/// assembles the summary in that order.
pub fn run_corpus(dir: &Path, base: &Options) -> Result<CorpusSummary, CliError> {
    let read = std::fs::read_dir(dir).map_err(|e| CliError::usage(format!("{}: {e}", dir.display())))?;
    let mut sessions: Vec<PathBuf> =
        read.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "qg")).collect();
    sessions.sort();
    if sessions.is_empty() {
        return Err(CliError::usage(format!("{}: no .qg sessions", dir.display())));
    }
    let entries: Vec<EntryReport> = sessions.par_iter().map(|p| run_entry(p, base)).collect();
    let mut failures = Vec::new();
    for e in &entries {
        if let Some(err) = &e.error {
            failures.push(format!("{}: {err}", e.name));
        }
        for (k, c) in e.checks.iter().enumerate() {
            for m in &c.mismatches {
                failures.push(format!("{}#{k} {}: {m}", e.name, c.command));
            }
        }
    }
    let total_checks = entries.iter().map(|e| e.checks.len()).sum();
    Ok(CorpusSummary { entries, total_checks, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn expectations_round_trip() {
        let e = parse_expectations(r#"{"checks":[{"command":"limit-closure","seq":["s"],"expect":{"t_stab":1}}]}"#).unwrap();
        assert_eq!(e.checks[0].command, Command::LimitClosure);
        assert_eq!(e.checks[0].expect["t_stab"], json!(1));
        assert!(parse_expectations(r#"{"checks":[{"command":"gb","expect":{}}]}"#).is_err());
        assert!(parse_expectations(r#"{"checks":[{"command":"corpus","expect":{"a":1}}]}"#).is_err());
        assert!(parse_expectations(r#"{"checks":[{"command":"gb","bogus":1,"expect":{"a":1}}]}"#).is_err());
        assert!(parse_expectations(r#"{"checks":[{"command":"gb","expect":{"a..b":1}}]}"#).is_err());
    }

    #[test]
    fn dotted_lookup() {
        let v = json!({ "a": { "b": [10, 20] } });
        assert_eq!(lookup(&v, "a.b.1"), Some(&json!(20)));
        assert_eq!(lookup(&v, "a.c"), None);
        assert_eq!(lookup(&v, "a.b.x"), None);
    }
}
