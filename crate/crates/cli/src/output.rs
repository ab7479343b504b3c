//! Output documents: a meta record plus typed rows, rendered as aligned
//! text, CSV, or line-delimited JSON.
//!
//! Integers are always serialized as exact decimal strings and rationals
//! as `p/q` in lowest terms; nothing is ever rounded. The CSV and NDJ
//! renderings are parseable back into the same document, byte-identically
//! re-serializable.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use narayana_core::{IdentityOutcome, VerificationReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Ndj,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "text" => Some(Format::Text),
            "csv" => Some(Format::Csv),
            "ndj" => Some(Format::Ndj),
            _ => None,
        }
    }
}

/// Header record identifying the command, its parameters, and wall time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub schema: u32,
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqRow {
    pub n: usize,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub check: String,
    pub range: String,
    pub pass: bool,
    pub index: Option<i64>,
    pub detail: Option<String>,
}

impl From<&VerificationReport> for VerifyRow {
    fn from(rep: &VerificationReport) -> Self {
        VerifyRow {
            check: rep.check.clone(),
            range: rep.range.clone(),
            pass: rep.pass,
            index: rep.counterexample.as_ref().map(|c| c.index),
            detail: rep.counterexample.as_ref().map(|c| c.detail.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurRow {
    pub partition: String,
    pub value: String,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRow {
    pub id: String,
    pub parameter: u64,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl From<&IdentityOutcome> for IdentityRow {
    fn from(o: &IdentityOutcome) -> Self {
        IdentityRow {
            id: o.id.clone(),
            parameter: o.parameter,
            lhs: o.lhs.to_string(),
            rhs: o.rhs.to_string(),
            pass: o.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub method: String,
    pub max: usize,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Rows {
    Seq(Vec<SeqRow>),
    Verify(Vec<VerifyRow>),
    Schur(Vec<SchurRow>),
    Identity(Vec<IdentityRow>),
    Bench(Vec<BenchRow>),
}

/// One complete command output.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub meta: Meta,
    pub rows: Rows,
}

impl Document {
    pub fn new(command: &str, params: BTreeMap<String, String>, rows: Rows, elapsed_ms: u64) -> Self {
        Document {
            meta: Meta {
                schema: SCHEMA_VERSION,
                command: command.to_string(),
                params,
                elapsed_ms,
            },
            rows,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
            Format::Ndj => self.to_ndj(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params = self
            .meta
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let _ = writeln!(out, "# {} {}", self.meta.command, params);
        match &self.rows {
            Rows::Seq(rows) => {
                let width = rows.len().to_string().len();
                for r in rows {
                    let _ = writeln!(out, "{:>width$}  {}", r.n, r.value);
                }
            }
            Rows::Verify(rows) => {
                for r in rows {
                    if r.pass {
                        let _ = writeln!(out, "pass  {} [{}]", r.check, r.range);
                    } else {
                        let _ = writeln!(
                            out,
                            "FAIL  {} [{}] at {} ({})",
                            r.check,
                            r.range,
                            r.index.unwrap_or(-1),
                            r.detail.as_deref().unwrap_or("")
                        );
                    }
                }
            }
            Rows::Schur(rows) => {
                let width = rows
                    .iter()
                    .map(|r| r.partition.len())
                    .max()
                    .unwrap_or(0);
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{:<width$}  {}  {}",
                        r.partition,
                        if r.positive { "+" } else { "NOT POSITIVE" },
                        r.value
                    );
                }
                let negatives = rows.iter().filter(|r| !r.positive).count();
                if negatives == 0 {
                    let _ = writeln!(out, "# all {} values positive", rows.len());
                } else {
                    let _ = writeln!(out, "# {negatives} of {} values NOT positive", rows.len());
                }
            }
            Rows::Identity(rows) => {
                for r in rows {
                    let _ = writeln!(
                        out,
                        "{}  {}({}) lhs = {} rhs = {}",
                        if r.pass { "pass" } else { "FAIL" },
                        r.id,
                        r.parameter,
                        r.lhs,
                        r.rhs
                    );
                }
            }
            Rows::Bench(rows) => {
                for r in rows {
                    let _ = writeln!(out, "{:<20} n <= {:<8} {} ms", r.method, r.max, r.elapsed_ms);
                }
            }
        }
        let _ = writeln!(out, "# elapsed {} ms", self.meta.elapsed_ms);
        out
    }

    pub fn to_csv(&self) -> String {
        match &self.rows {
            Rows::Seq(rows) => rows_to_csv(rows),
            Rows::Verify(rows) => rows_to_csv(rows),
            Rows::Schur(rows) => rows_to_csv(rows),
            Rows::Identity(rows) => rows_to_csv(rows),
            Rows::Bench(rows) => rows_to_csv(rows),
        }
    }

    pub fn to_ndj(&self) -> String {
        let mut out = serde_json::to_string(&self.meta).expect("meta serializes");
        out.push('\n');
        match &self.rows {
            Rows::Seq(rows) => append_ndj(&mut out, rows),
            Rows::Verify(rows) => append_ndj(&mut out, rows),
            Rows::Schur(rows) => append_ndj(&mut out, rows),
            Rows::Identity(rows) => append_ndj(&mut out, rows),
            Rows::Bench(rows) => append_ndj(&mut out, rows),
        }
        out
    }

    /// Parse an NDJ rendering back. The meta line decides the row type.
    pub fn parse_ndj(s: &str) -> Result<Document, String> {
        let mut lines = s.lines();
        let meta: Meta = serde_json::from_str(lines.next().ok_or("empty document")?)
            .map_err(|e| e.to_string())?;
        let rest: Vec<&str> = lines.collect();
        let rows = match meta.command.as_str() {
            "seq" => Rows::Seq(parse_ndj_rows(&rest)?),
            "verify" => Rows::Verify(parse_ndj_rows(&rest)?),
            "schur" => Rows::Schur(parse_ndj_rows(&rest)?),
            "identity" => Rows::Identity(parse_ndj_rows(&rest)?),
            "bench" => Rows::Bench(parse_ndj_rows(&rest)?),
            other => return Err(format!("unknown command {other:?}")),
        };
        Ok(Document { meta, rows })
    }
}

fn rows_to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("row serializes");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf8")
}

/// Parse a CSV rendering of one row type.
pub fn csv_rows<T: DeserializeOwned>(s: &str) -> Result<Vec<T>, String> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    r.deserialize().collect::<Result<Vec<T>, _>>().map_err(|e| e.to_string())
}

/// Re-serialize parsed CSV rows (for round-trip checks).
pub fn csv_string<T: Serialize>(rows: &[T]) -> String {
    rows_to_csv(rows)
}

fn append_ndj<T: Serialize>(out: &mut String, rows: &[T]) {
    for row in rows {
        out.push_str(&serde_json::to_string(row).expect("row serializes"));
        out.push('\n');
    }
}

fn parse_ndj_rows<T: DeserializeOwned>(lines: &[&str]) -> Result<Vec<T>, String> {
    lines
        .iter()
        .map(|l| serde_json::from_str(l).map_err(|e| e.to_string()))
        .collect()
}
