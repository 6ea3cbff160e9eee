//! Fixed-format CSV and canonical JSON.
//!
//! Numbers are written with 17 significant digits in exponent form, '.' as
//! decimal point, '\n' line endings. JSON objects come out with sorted keys
//! (serde_json's map is a BTreeMap without `preserve_order`), so identical
//! inputs give byte-identical files.

use serde::Serialize;

pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// Header plus string cells.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
    }

    /// Array of objects keyed by the header; numeric cells stay strings so
    /// that both formats carry the same digits.
    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Map<String, serde_json::Value>> = self
            .rows
            .iter()
            .map(|r| self.header.iter().cloned().zip(r.iter().map(|c| serde_json::Value::String(c.clone()))).collect())
            .collect();
        canonical_json(&rows)
    }
}

pub fn canonical_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serializable report");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable report");
    s.push('\n');
    s
}
