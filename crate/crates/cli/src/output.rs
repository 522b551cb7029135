//! The uniform output record and its JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::Write;

use clap::ValueEnum;
use pathpairs::arith::rat_to_f64;
use pathpairs::Rat;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One computed value. Counts and probabilities are exact strings; `float`
/// is only set where a floating-point approximation is asked for.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub index: Option<String>,
    pub quantity: String,
    pub value: String,
    pub provenance: String,
    pub float: Option<f64>,
}

impl ResultRow {
    pub fn exact(
        index: Option<String>,
        quantity: &str,
        value: impl Display,
        provenance: &str,
    ) -> Self {
        ResultRow {
            index,
            quantity: quantity.to_string(),
            value: value.to_string(),
            provenance: provenance.to_string(),
            float: None,
        }
    }

    pub fn with_float(mut self, value: &Rat) -> Self {
        self.float = Some(rat_to_f64(value));
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub results: Vec<ResultRow>,
    /// Whether all routes agreed; absent when only one route ran.
    pub consistency: Option<bool>,
    /// Command-specific structured payload.
    pub details: Option<serde_json::Value>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            params: BTreeMap::new(),
            results: Vec::new(),
            consistency: None,
            details: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, row: ResultRow) {
        self.results.push(row);
    }

    /// Sets `consistency` by comparing every pair of rows that share a
    /// quantity and an index.
    pub fn settle_consistency(&mut self) -> bool {
        let mut seen: BTreeMap<(&str, Option<&str>), &str> = BTreeMap::new();
        let mut ok = true;
        for row in &self.results {
            let key = (row.quantity.as_str(), row.index.as_deref());
            match seen.get(&key) {
                Some(v) if *v != row.value => ok = false,
                Some(_) => {}
                None => {
                    seen.insert(key, &row.value);
                }
            }
        }
        self.consistency = Some(ok);
        ok
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    command: &'a str,
    params: String,
    index: &'a str,
    quantity: &'a str,
    value: &'a str,
    provenance: &'a str,
    float: Option<f64>,
    consistency: Option<bool>,
}

pub fn render(record: &OutputRecord, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, record)?;
            writeln!(out)
        }
        Format::Csv => {
            let params = record
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            let mut w = csv::Writer::from_writer(out);
            if record.results.is_empty() {
                w.write_record([
                    "command",
                    "params",
                    "index",
                    "quantity",
                    "value",
                    "provenance",
                    "float",
                    "consistency",
                ])?;
            }
            for row in &record.results {
                w.serialize(CsvRow {
                    command: &record.command,
                    params: params.clone(),
                    index: row.index.as_deref().unwrap_or(""),
                    quantity: &row.quantity,
                    value: &row.value,
                    provenance: &row.provenance,
                    float: row.float,
                    consistency: record.consistency,
                })?;
            }
            w.flush()
        }
        Format::Text => {
            let params = record
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "{} {params}", record.command)?;
            for row in &record.results {
                let index = row
                    .index
                    .as_ref()
                    .map(|i| format!("[{i}]"))
                    .unwrap_or_default();
                let float = row.float.map(|f| format!(" ~ {f}")).unwrap_or_default();
                writeln!(
                    out,
                    "  {}{index} = {}{float}  ({})",
                    row.quantity, row.value, row.provenance
                )?;
            }
            if let Some(c) = record.consistency {
                writeln!(out, "  consistent: {c}")?;
            }
            Ok(())
        }
    }
}
