//! Appendix fixtures shipped with the crate (override with `MIRRORWEB_FIXTURES`).

use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{CliError, Result};

pub const ENV_VAR: &str = "MIRRORWEB_FIXTURES";

pub fn fixture_dir() -> PathBuf {
    std::env::var_os(ENV_VAR)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")))
}

/// One intermediate model: removed columns, monomial exponents per block and
/// irrelevant-ideal generators, all indices 1-based.
#[derive(Debug, Clone, Deserialize)]
pub struct Entry {
    pub removed: Vec<usize>,
    pub polynomials: Vec<Vec<Vec<i64>>>,
    pub ideal: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ModelTable {
    pub entries: Vec<Entry>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ColumnTable {
    pub columns: Vec<Vec<i64>>,
}

fn read<T: for<'de> Deserialize<'de>>(file: &str) -> Result<T> {
    let path = fixture_dir().join(file);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| CliError::Parse(format!("cannot read fixture {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn appendix_a() -> Result<ModelTable> {
    read("appendix_a.json")
}

pub fn appendix_b() -> Result<ColumnTable> {
    read("appendix_b.json")
}

pub fn appendix_c() -> Result<ModelTable> {
    read("appendix_c.json")
}

/// Extreme models of the Y_{2,2} web (A = ∅ and A = I^W).
pub fn y22_extremes() -> Result<ModelTable> {
    read("y22_extremes.json")
}
