//! Deterministic CSV and JSON emission: 17 significant digits, '.' decimal
//! separator, LF line endings. Identical inputs produce identical bytes.

use std::io::Write;
use std::path::Path;

use dho_core::CheckReport;
use serde_json::{json, Map, Value};

use crate::config::CliError;

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Float(f64),
    Int(i64),
}

/// Result of one command: a columnar table plus embedded check reports.
pub struct Output {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub checks: Vec<CheckReport>,
}

impl Output {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// 17 significant digits: round-trips f64 exactly and is stable across
/// platforms.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn cell_csv(c: &Cell) -> String {
    match c {
        Cell::Float(x) => fmt_float(*x),
        Cell::Int(i) => i.to_string(),
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Float(x) => {
            if x.is_finite() {
                json!(x)
            } else {
                // JSON has no NaN/inf literals; keep them printable
                json!(format!("{x}"))
            }
        }
        Cell::Int(i) => json!(i),
    }
}

fn check_csv_rows(checks: &[CheckReport]) -> String {
    let mut s = String::new();
    if checks.is_empty() {
        return s;
    }
    s.push_str("check_name,measured,target,tolerance,passed,metadata\n");
    for c in checks {
        let meta = c
            .metadata
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join("; ");
        s.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_quote(&c.check_name),
            fmt_float(c.measured),
            fmt_float(c.target),
            fmt_float(c.tolerance),
            c.passed,
            csv_quote(&meta),
        ));
    }
    s
}

pub fn render_csv(out: &Output) -> String {
    let mut s = String::new();
    if !out.columns.is_empty() {
        s.push_str(&out.columns.join(","));
        s.push('\n');
        for row in &out.rows {
            let line: Vec<String> = row.iter().map(cell_csv).collect();
            s.push_str(&line.join(","));
            s.push('\n');
        }
    }
    if !out.checks.is_empty() {
        if !out.columns.is_empty() {
            s.push('\n');
        }
        s.push_str(&check_csv_rows(&out.checks));
    }
    s
}

pub fn render_json(out: &Output, omega: f64, alpha: f64, trunc: usize) -> String {
    let rows: Vec<Value> = out
        .rows
        .iter()
        .map(|row| {
            let mut obj = Map::new();
            for (name, cell) in out.columns.iter().zip(row) {
                obj.insert((*name).to_string(), cell_json(cell));
            }
            Value::Object(obj)
        })
        .collect();
    let checks: Vec<Value> = out
        .checks
        .iter()
        .map(|c| {
            let meta: Map<String, Value> = c
                .metadata
                .iter()
                .map(|(k, v)| (k.clone(), json!(v)))
                .collect();
            json!({
                "check_name": c.check_name,
                "measured": if c.measured.is_finite() { json!(c.measured) } else { json!(format!("{}", c.measured)) },
                "target": c.target,
                "tolerance": c.tolerance,
                "passed": c.passed,
                "metadata": Value::Object(meta),
            })
        })
        .collect();
    let doc = json!({
        "command": out.command,
        "omega": omega,
        "alpha": alpha,
        "trunc": trunc,
        "columns": out.columns,
        "rows": rows,
        "checks": checks,
        "all_passed": out.all_passed(),
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("static structure serializes");
    text.push('\n');
    text
}

pub fn write_rendered(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
        Some(p) => {
            if let Some(dir) = p.parent() {
                if !dir.as_os_str().is_empty() && !dir.exists() {
                    return Err(CliError::Io(format!(
                        "output directory {} does not exist",
                        dir.display()
                    )));
                }
            }
            std::fs::write(p, text.as_bytes())
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display())))
        }
    }
}
