//! Line-delimited JSON results files.
//!
//! A results file holds one `config` record, one `run` record per run in
//! run order, and a closing `summary` record. Every line is a JSON object
//! whose `record` field names its kind.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::config::ConfigFile;
use crate::vqe::{RunRecord, Summary};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Config(ConfigFile),
    Run(RunRecord),
    Summary(Summary),
}

pub fn write_records<W: Write>(mut out: W, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Reads every record; blank lines are skipped.
pub fn read_records<R: BufRead>(input: R) -> Result<Vec<Record>, String> {
    let mut records = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| format!("read error: {e}"))?;
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(&line).map_err(|e| format!("line {}: {e}", i + 1))?;
        records.push(record);
    }
    Ok(records)
}

/// Run records, in file order.
pub fn runs(records: &[Record]) -> Vec<&RunRecord> {
    records
        .iter()
        .filter_map(|r| match r {
            Record::Run(run) => Some(run),
            _ => None,
        })
        .collect()
}

pub fn summary(records: &[Record]) -> Option<&Summary> {
    records.iter().rev().find_map(|r| match r {
        Record::Summary(s) => Some(s),
        _ => None,
    })
}

pub fn config(records: &[Record]) -> Option<&ConfigFile> {
    records.iter().find_map(|r| match r {
        Record::Config(c) => Some(c),
        _ => None,
    })
}
