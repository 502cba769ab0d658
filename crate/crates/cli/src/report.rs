use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub tool: &'static str,
    pub version: &'static str,
    pub tolerances: BTreeMap<&'static str, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub timestamp: String,
}

impl RunManifest {
    pub fn new(tolerances: &[(&'static str, f64)], seed: Option<u64>) -> Self {
        Self {
            command_line: std::env::args().collect(),
            tool: env!("CARGO_BIN_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            tolerances: tolerances.iter().copied().collect(),
            seed,
            timestamp: chrono::Utc::now().to_rfc3339(),
        }
    }
}

#[derive(Serialize)]
struct Document<'a, T> {
    manifest: &'a RunManifest,
    #[serde(flatten)]
    body: &'a T,
}

/// Writes `{ "manifest": ..., <body fields> }` as one JSON document.
pub fn print_json<T: Serialize>(manifest: &RunManifest, body: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, &Document { manifest, body })?;
    writeln!(out).map_err(serde_json::Error::io)?;
    Ok(())
}

pub fn csv_writer() -> csv::Writer<io::Stdout> {
    csv::Writer::from_writer(io::stdout())
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}
