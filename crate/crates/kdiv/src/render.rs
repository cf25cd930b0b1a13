//! JSON values for core types and their table rendering.

use std::fmt::Display;

use kdiv_core::{DivisibleOrder, Error, HypothesisKind, LPower, Verdict};
use serde_json::{json, Value};

/// Numbers always travel as decimal strings.
pub fn text(x: impl Display) -> Value {
    Value::String(x.to_string())
}

pub fn lpower(p: &LPower) -> Value {
    json!({ "l": text(p.l()), "exponent": text(p.exponent()), "value": text(p.value()) })
}

pub fn order(d: &DivisibleOrder) -> Value {
    let inputs: Vec<Value> =
        d.inputs.iter().map(|(name, v)| json!({ "name": name, "value": text(v) })).collect();
    json!({
        "context": d.context.name(),
        "n": text(d.n),
        "l": text(d.l),
        "order": lpower(&d.order),
        "inputs": inputs,
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let hypotheses: Vec<Value> = v
        .hypotheses
        .iter()
        .map(|h| {
            let kind = match h.kind {
                HypothesisKind::Precondition => "precondition",
                HypothesisKind::Condition => "condition",
            };
            json!({ "name": h.name, "kind": kind, "satisfied": h.satisfied, "witness": h.witness })
        })
        .collect();
    json!({ "outcome": v.outcome.name(), "conclusion": v.conclusion, "hypotheses": hypotheses })
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroInput => "zero-input",
        Error::NotPrime(_) => "not-prime",
        Error::NegativeValuation { .. } => "negative-valuation",
        Error::HypothesisViolation(_) => "hypothesis-violation",
        Error::CharacteristicClash { .. } => "characteristic-clash",
        Error::PoleEvaluation => "pole-evaluation",
        Error::InvalidCurve(_) => "invalid-curve",
        Error::InvalidArgument(_) => "invalid-argument",
    }
}

pub fn error(e: &Error) -> Value {
    json!({ "error": { "kind": error_kind(e), "message": e.to_string() } })
}

/// Pretty JSON followed by a newline.
pub fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values hold only strings, bools and maps");
    s.push('\n');
    s
}

/// Two-column table of leaf paths and values.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten(String::new(), v, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}

fn flatten(path: String, v: &Value, rows: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                flatten(p, x, rows);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(format!("{path}[{i}]"), x, rows);
            }
        }
        Value::String(s) => rows.push((path, s.clone())),
        other => rows.push((path, other.to_string())),
    }
}
