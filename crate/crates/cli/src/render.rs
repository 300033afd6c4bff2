//! Text, CSV and JSON rendering. All output is assembled into a `String`
//! so that the caller prints it in one piece.

use num_bigint::BigInt;
use serde_json::{json, Value};
use springergreen::springer::Report;
use springergreen::weylchar::ClassLabel;

use crate::cache::StoredTable;
use crate::config::OutputFormat;

pub fn csv_lines<I, R, S>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = S>,
    S: AsRef<[u8]>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("utf-8 input")
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// `"c₁ · χ^{l₁} + c₂ · χ^{l₂}"`, or `"0"` for the empty sum.
pub fn character_sum(terms: &[(String, BigInt)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (label, c)) in terms.iter().enumerate() {
        let neg = c < &BigInt::from(0);
        if i > 0 {
            out.push_str(if neg { " - " } else { " + " });
        } else if neg {
            out.push('-');
        }
        let mag = if neg { -c.clone() } else { c.clone() };
        out.push_str(&format!("{mag} · χ^{{{label}}}"));
    }
    out
}

fn class_text(l: &ClassLabel) -> String {
    l.to_string()
}

pub fn table(t: &StoredTable, format: OutputFormat) -> String {
    let header = |name: &str, f: &dyn Fn(usize) -> String| -> Vec<String> {
        std::iter::once(name.to_string()).chain((0..t.classes.len()).map(f)).collect()
    };
    let mut rows = vec![
        header("class", &|c| class_text(&t.classes[c].label)),
        header("size", &|c| t.classes[c].class_size.to_string()),
        header("centralizer", &|c| t.classes[c].centralizer_order.to_string()),
    ];
    for (label, values) in t.irreps.iter().zip(&t.values) {
        rows.push(std::iter::once(label.to_string()).chain(values.iter().cloned()).collect());
    }
    match format {
        OutputFormat::Csv => csv_lines(&rows),
        OutputFormat::Plain => aligned(&rows),
        OutputFormat::Json => json_text(&json!({
            "type": t.ty.to_string(),
            "n": t.n,
            "classes": t.classes.iter().map(|c| json!({
                "label": class_text(&c.label),
                "size": c.class_size.to_string(),
                "centralizer": c.centralizer_order.to_string(),
            })).collect::<Vec<_>>(),
            "irreps": t.irreps.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "values": t.values,
        })),
    }
}

pub fn reports(rs: &[Report], format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let v = if rs.len() == 1 {
                serde_json::to_value(&rs[0])
            } else {
                serde_json::to_value(rs)
            };
            json_text(&v.expect("reports serialize"))
        }
        OutputFormat::Csv => {
            let mut rows = vec![["suite", "type", "n", "lambda", "param", "pass", "witness", "lhs", "rhs"].map(String::from).to_vec()];
            for r in rs {
                for c in &r.cases {
                    rows.push(vec![
                        r.suite.clone(),
                        r.ty.clone(),
                        r.n.to_string(),
                        c.lambda.clone(),
                        c.param.clone(),
                        c.pass.to_string(),
                        c.witness.clone().unwrap_or_default(),
                        c.lhs.clone().unwrap_or_default(),
                        c.rhs.clone().unwrap_or_default(),
                    ]);
                }
            }
            csv_lines(&rows)
        }
        OutputFormat::Plain => {
            let mut out = String::new();
            for r in rs {
                out.push_str(&format!("{} {}\n", if r.passed() { "PASS" } else { "FAIL" }, r.summary()));
                for c in r.failures() {
                    out.push_str(&format!("  λ={} {}: {}", c.lambda, c.param, c.witness.as_deref().unwrap_or("")));
                    if let (Some(l), Some(r)) = (&c.lhs, &c.rhs) {
                        out.push_str(&format!(" (lhs {l}, rhs {r})"));
                    }
                    out.push('\n');
                }
            }
            out
        }
    }
}
