//! Shared formatting helpers.

use std::fmt::Display;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::Failure;

pub fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure {
            code: crate::EXIT_COMPUTATION,
            kind: "Serialization".into(),
            message: e.to_string(),
        })
}

/// Insert `meta` (version and wall time) into a JSON object document.
pub fn with_meta(body: &str, elapsed: Duration) -> Result<String, Failure> {
    let mut value: Value = serde_json::from_str(body).map_err(|e| Failure {
        code: crate::EXIT_COMPUTATION,
        kind: "Serialization".into(),
        message: e.to_string(),
    })?;
    if let Value::Object(map) = &mut value {
        map.insert(
            "meta".into(),
            serde_json::json!({
                "version": env!("CARGO_PKG_VERSION"),
                "elapsed_ms": elapsed.as_secs_f64() * 1e3,
            }),
        );
    }
    json(&value)
}

/// `(a, b, c)`.
pub fn tuple<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn csv_row<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| csv_field(&x.to_string())).collect();
    parts.join(",") + "\n"
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Vector packed into one CSV cell, `a;b;c`.
pub fn cell<T: Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    parts.join(";")
}

/// Round to 12 decimals and clear negative zero so output is stable.
pub fn clean(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Right-aligned grid with row and column headers.
pub fn grid<T: Display>(col_labels: &[String], row_labels: &[String], rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
    let label_w = row_labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let col_w = cells
        .iter()
        .flatten()
        .chain(col_labels)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let mut out = format!("{:label_w$}", "");
    for l in col_labels {
        out += &format!(" {l:>col_w$}");
    }
    out.push('\n');
    for (label, row) in row_labels.iter().zip(&cells) {
        out += &format!("{label:label_w$}");
        for c in row {
            out += &format!(" {c:>col_w$}");
        }
        out.push('\n');
    }
    out
}

/// Parse `1,-2, 0,1` into integers.
pub fn parse_ints(flag: &str, raw: &str) -> Result<Vec<i64>, Failure> {
    raw.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>().map_err(|_| Failure {
                code: crate::EXIT_COMPUTATION,
                kind: "InvalidInput".into(),
                message: format!("{flag}: `{t}` is not an integer"),
            })
        })
        .collect()
}
