use serde_json::{json, Map, Value};

use crate::{Format, Report};

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable");
            s.push('\n');
            s
        }
        Format::Jsonl => jsonl(report),
        Format::Text => text(report),
        Format::Csv => csv_rows(&report.results),
    }
}

fn jsonl(report: &Report) -> String {
    let mut out = String::new();
    for r in &report.results {
        out.push_str(&json!({ "result": r }).to_string());
        out.push('\n');
    }
    for c in &report.counterexamples {
        out.push_str(&json!({ "counterexample": c }).to_string());
        out.push('\n');
    }
    let summary = json!({
        "command": report.command,
        "parameters": report.parameters,
        "results": report.results.len(),
        "counterexamples": report.counterexamples.len(),
        "elapsed_ms": report.elapsed_ms,
        "version": report.version,
    });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(_) | Value::Object(_) => None,
    }
}

fn text(report: &Report) -> String {
    let mut out = format!("command: {}\n", report.command);
    for (k, v) in &report.parameters {
        out.push_str(&format!("  {k} = {}\n", scalar(v).unwrap_or_else(|| v.to_string())));
    }
    for (i, r) in report.results.iter().enumerate() {
        out.push_str(&format!("result {}:\n", i + 1));
        match r {
            Value::Object(m) => {
                for (k, v) in m {
                    out.push_str(&format!("  {k}: {}\n", scalar(v).unwrap_or_else(|| v.to_string())));
                }
            }
            other => out.push_str(&format!("  {}\n", scalar(other).unwrap_or_else(|| other.to_string()))),
        }
    }
    out.push_str(&format!("counterexamples: {}\n", report.counterexamples.len()));
    for c in &report.counterexamples {
        out.push_str(&format!("  {c}\n"));
    }
    out
}

fn csv_rows(results: &[Value]) -> String {
    let rows: Vec<Map<String, Value>> = results
        .iter()
        .map(|r| match r {
            Value::Object(m) => m.clone(),
            other => Map::from_iter([("value".to_string(), other.clone())]),
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for row in &rows {
        for (k, v) in row {
            if scalar(v).is_some() && !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for row in &rows {
        let rec: Vec<String> = header
            .iter()
            .map(|k| row.get(k).and_then(scalar).unwrap_or_default())
            .collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}
