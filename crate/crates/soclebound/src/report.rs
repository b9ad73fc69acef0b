//! Versioned machine-readable reports.
//!
//! The JSON emission is canonical: keys are sorted, exact quantities are
//! integers or strings (never floats), and two emissions of equal report
//! data are byte-identical. Wall-clock timing is therefore kept out of the
//! JSON document and printed to stderr as a diagnostic; the table format is
//! for humans.

use serde_json::Value;

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub certification: Value,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value, certification: Value) -> Self {
        Report { command: command.to_string(), inputs, results, certification }
    }

    pub fn to_value(&self) -> Value {
        serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "certification": self.certification,
        })
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value())
                    .expect("report serialization");
                s.push('\n');
                s
            }
            Format::Table => self.emit_table(),
        }
    }

    fn emit_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        render_section(&mut out, "inputs", &self.inputs);
        render_section(&mut out, "results", &self.results);
        render_section(&mut out, "certification", &self.certification);
        out
    }
}

fn render_section(out: &mut String, title: &str, v: &Value) {
    if v.is_null() {
        return;
    }
    out.push_str(title);
    out.push('\n');
    render_value(out, v, 2);
}

fn render_value(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Array(items) if items.iter().all(|x| x.is_object()) && !items.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_rows(out, items, indent + 2);
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_value(out, val, indent + 2);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) if items.iter().all(|x| x.is_object()) && !items.is_empty() => {
            render_rows(out, items, indent);
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

/// Aligned column rendering for arrays of flat objects (family tables).
/// Well-known invariant columns lead; the rest stay alphabetical.
const LEADING_COLUMNS: &[&str] = &["a", "c", "g", "n", "gamma_dim", "index"];

fn render_rows(out: &mut String, rows: &[Value], indent: usize) {
    let pad = " ".repeat(indent);
    let mut cols: Vec<String> = Vec::new();
    for row in rows {
        if let Value::Object(map) = row {
            for k in map.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    cols.sort_by_key(|c| {
        (LEADING_COLUMNS.iter().position(|l| l == c).unwrap_or(usize::MAX), c.clone())
    });
    let mut table: Vec<Vec<String>> = vec![cols.clone()];
    for row in rows {
        let map = row.as_object().expect("row object");
        table.push(
            cols.iter()
                .map(|c| map.get(c).map(scalar).unwrap_or_default())
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..cols.len())
        .map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0))
        .collect();
    for r in &table {
        let line: Vec<String> =
            r.iter().zip(&widths).map(|(cell, w)| format!("{cell:<w$}")).collect();
        out.push_str(&format!("{pad}{}\n", line.join("  ").trim_end()));
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "invariants",
            serde_json::json!({"ring": "GF(32003)[x,y]/(x^2, x*y)", "seed": 1}),
            serde_json::json!({"c": 1, "g": 2, "n": 3}),
            serde_json::json!({"c": "exact", "g": "exact"}),
        )
    }

    #[test]
    fn json_emission_is_byte_identical_and_sorted() {
        let r = sample();
        let a = r.emit(Format::Json);
        let b = r.emit(Format::Json);
        assert_eq!(a, b);
        // serde_json objects are BTreeMaps: keys come out sorted
        let c_pos = a.find("\"c\": 1").unwrap();
        let g_pos = a.find("\"g\": 2").unwrap();
        assert!(c_pos < g_pos);
        let parsed: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(parsed["schema_version"], SCHEMA_VERSION);
        assert_eq!(parsed["results"]["n"], 3);
    }

    #[test]
    fn empty_results_are_still_a_valid_document() {
        let r = Report::new("dim", Value::Null, serde_json::json!({}), Value::Null);
        let s = r.emit(Format::Json);
        let parsed: Value = serde_json::from_str(&s).unwrap();
        assert!(parsed["results"].as_object().unwrap().is_empty());
    }

    #[test]
    fn table_renders_rows_with_columns() {
        let r = Report::new(
            "family-xy",
            Value::Null,
            serde_json::json!({"rows": [
                {"a": 1, "c": 1, "g": 2},
                {"a": 2, "c": 2, "g": 4},
            ]}),
            Value::Null,
        );
        let t = r.emit(Format::Table);
        assert!(t.contains("a  c  g"), "{t}");
        assert!(t.contains("2  2  4"), "{t}");
    }

    #[test]
    fn no_floats_appear_for_exact_quantities() {
        let s = sample().emit(Format::Json);
        assert!(!s.contains('.'), "unexpected float formatting in {s}");
    }
}
