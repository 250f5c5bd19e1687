use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use qgor_core::analysis::Budgets;

use crate::{TOOL, VERSION};

/// Top-level report. Serialized through `serde_json::Value`, whose maps are
/// ordered, so every level comes out with sorted keys.
#[derive(Serialize)]
pub struct Envelope {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub budgets: Budgets,
    pub timings_ms: BTreeMap<String, u64>,
}

impl Envelope {
    pub fn new(command: &str, budgets: &Budgets, inputs: Value, result: Value, timings_ms: BTreeMap<String, u64>) -> Self {
        Self {
            tool: TOOL,
            version: VERSION,
            seed: budgets.seed,
            command: command.to_string(),
            inputs,
            result,
            budgets: *budgets,
            timings_ms,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

/// Canonical JSON text: sorted keys, two-space indentation, trailing newline.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(if parts.is_empty() { "(none)".into() } else { parts.join(", ") })
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_into(out, val, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}[{i}]\n"));
                        render_into(out, item, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented `key: value` listing of a result object.
pub fn render_text(result: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, result, 0);
    out
}
