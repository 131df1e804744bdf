//! Flat records rendered as human text, CSV or JSON. CSV and JSON share one
//! field list, so both carry the same values in the same key order.

use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Bool(bool),
    Text(String),
    /// Big integers: decimal string in CSV/JSON, `human` form in text output.
    Big {
        decimal: String,
        human: String,
    },
    Null,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Big { decimal, .. } => decimal.clone(),
            Cell::Null => String::new(),
        }
    }

    fn human(&self) -> String {
        match self {
            Cell::Big { human, .. } => human.clone(),
            Cell::Null => "-".into(),
            other => other.csv(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Int(v) => s.serialize_u64(*v),
            Cell::Float(v) => s.serialize_f64(*v),
            Cell::Bool(v) => s.serialize_bool(*v),
            Cell::Text(v) => s.serialize_str(v),
            Cell::Big { decimal, .. } => s.serialize_str(decimal),
            Cell::Null => s.serialize_none(),
        }
    }
}

/// Ordered `(key, value)` pairs.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Record(pub Vec<(&'static str, Cell)>);

impl Record {
    pub fn push(&mut self, key: &'static str, cell: Cell) -> &mut Self {
        self.0.push((key, cell));
        self
    }

    fn keys(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.0.iter().map(|(k, _)| *k)
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Rows<'a>(&'a [Record]);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for r in self.0 {
            seq.serialize_element(r)?;
        }
        seq.end()
    }
}

fn csv(rows: &[Record]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        out.push_str(&first.keys().collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    for r in rows {
        let line: Vec<String> = r.0.iter().map(|(_, c)| c.csv()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records always serialize");
    s.push('\n');
    s
}

/// One record: `key: value` lines, a CSV header plus one row, or a JSON
/// object.
pub fn single(record: &Record, format: Format) -> String {
    match format {
        Format::Human => {
            let width = record.keys().map(str::len).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in &record.0 {
                let _ = writeln!(out, "{k:<width$}  {}", v.human());
            }
            out
        }
        Format::Csv => csv(std::slice::from_ref(record)),
        Format::Json => json(record),
    }
}

/// Several records with the same keys: an aligned table, CSV, or a JSON
/// array. `human` overrides the text shown per cell in the aligned table.
pub fn table(rows: &[Record], format: Format, human: impl Fn(&str, &Cell) -> String) -> String {
    match format {
        Format::Human => {
            let Some(first) = rows.first() else {
                return String::new();
            };
            let keys: Vec<&str> = first.keys().collect();
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.0.iter().map(|(k, c)| human(k, c)).collect())
                .collect();
            let widths: Vec<usize> = (0..keys.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|row| row[i].len())
                        .chain([keys[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut out = String::new();
            let header: Vec<String> = keys
                .iter()
                .zip(&widths)
                .map(|(k, w)| format!("{k:>w$}"))
                .collect();
            out.push_str(header.join("  ").trim_end());
            out.push('\n');
            for row in &cells {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
        Format::Csv => csv(rows),
        Format::Json => json(&Rows(rows)),
    }
}

pub fn human_cell(cell: &Cell) -> String {
    cell.human()
}
