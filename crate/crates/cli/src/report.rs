//! Machine-readable experiment reports.
//!
//! JSON is the default; serde_json's default map keeps keys sorted, so equal
//! inputs produce byte-identical reports. Wall-clock timing is included only
//! when requested, keeping the default output deterministic.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::formats::SystemFile;
use crate::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

pub struct Report {
    pub experiment: &'static str,
    pub system: Value,
    pub params: Value,
    pub rows: Vec<Value>,
    pub wall_clock_ms: Option<u128>,
}

impl Report {
    pub fn new(experiment: &'static str, system: Option<&SystemFile>, params: Value) -> Self {
        let system = match system {
            Some(s) => json!({ "generators": s.generators, "matrix": s.matrix }),
            None => Value::Null,
        };
        Report {
            experiment,
            system,
            params,
            rows: Vec::new(),
            wall_clock_ms: None,
        }
    }

    pub fn push(&mut self, row: Value) {
        self.rows.push(row);
    }

    fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("experiment".into(), json!(self.experiment));
        map.insert("params".into(), self.params.clone());
        map.insert("rows".into(), Value::Array(self.rows.clone()));
        map.insert("system".into(), self.system.clone());
        map.insert("version".into(), json!(VERSION));
        if let Some(ms) = self.wall_clock_ms {
            map.insert("wall_clock_ms".into(), json!(ms));
        }
        Value::Object(map)
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
        match format {
            Format::Json => {
                let value = self.to_value();
                serde_json::to_writer_pretty(&mut *out, &value)
                    .map_err(|e| CliError::input(format!("write failed: {e}")))?;
                writeln!(out).map_err(|e| CliError::input(format!("write failed: {e}")))?;
            }
            Format::Csv => {
                let mut columns: Vec<String> = Vec::new();
                for row in &self.rows {
                    if let Value::Object(map) = row {
                        for key in map.keys() {
                            if !columns.contains(key) {
                                columns.push(key.clone());
                            }
                        }
                    }
                }
                columns.sort();
                writeln!(out, "{}", columns.join(","))
                    .map_err(|e| CliError::input(format!("write failed: {e}")))?;
                for row in &self.rows {
                    let cells: Vec<String> = columns
                        .iter()
                        .map(|c| match row.get(c) {
                            None | Some(Value::Null) => String::new(),
                            Some(Value::String(s)) => csv_quote(s),
                            Some(other) => csv_quote(&other.to_string()),
                        })
                        .collect();
                    writeln!(out, "{}", cells.join(","))
                        .map_err(|e| CliError::input(format!("write failed: {e}")))?;
                }
            }
        }
        Ok(())
    }
}

fn csv_quote(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
