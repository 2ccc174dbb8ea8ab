//! The nine published signature/rank rows, embedded as ground truth for
//! tests and the `table` command.
//!
//! Signatures are recomputable; ranks are not (their formulas live in the
//! classical-count literature) and are carried as data only.

use crate::localization::DegreeProfile;
use num_bigint::BigInt;
use once_cell::sync::Lazy;
use serde::Deserialize;
use thiserror::Error;

/// The resource shipped with the crate; an alternate file with the same
/// schema can be loaded with [`load_table`].
pub const EMBEDDED_TABLE_JSON: &str = include_str!("../data/signature_table.json");

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("failed to read table file {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid table json: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid number in table: {0}")]
    Number(String),
}

#[derive(Debug, Deserialize)]
struct RawRow {
    n: usize,
    degrees: Vec<i64>,
    signature: String,
    rank: String,
}

/// One row of the published table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub degrees: Vec<i64>,
    pub signature: BigInt,
    pub rank: BigInt,
}

fn parse_rows(json: &str) -> Result<Vec<TableRow>, FixtureError> {
    let raw: Vec<RawRow> = serde_json::from_str(json)?;
    raw.into_iter()
        .map(|row| {
            let signature = row
                .signature
                .parse::<BigInt>()
                .map_err(|_| FixtureError::Number(row.signature.clone()))?;
            let rank = row
                .rank
                .parse::<BigInt>()
                .map_err(|_| FixtureError::Number(row.rank.clone()))?;
            let mut degrees = row.degrees;
            degrees.sort_unstable();
            Ok(TableRow {
                n: row.n,
                degrees,
                signature,
                rank,
            })
        })
        .collect()
}

static EMBEDDED_TABLE: Lazy<Vec<TableRow>> =
    Lazy::new(|| parse_rows(EMBEDDED_TABLE_JSON).expect("embedded table is valid"));

/// The embedded nine rows.
pub fn table() -> &'static [TableRow] {
    &EMBEDDED_TABLE
}

/// Loads a table with the same schema from an external file.
pub fn load_table(path: &str) -> Result<Vec<TableRow>, FixtureError> {
    let json = std::fs::read_to_string(path).map_err(|source| FixtureError::Read {
        path: path.to_string(),
        source,
    })?;
    parse_rows(&json)
}

/// Finds the row for a profile, if the case is tabulated.
pub fn lookup(profile: &DegreeProfile) -> Option<&'static TableRow> {
    lookup_in(table(), profile)
}

pub fn lookup_in<'a>(rows: &'a [TableRow], profile: &DegreeProfile) -> Option<&'a TableRow> {
    rows.iter()
        .find(|row| row.n == profile.n() && row.degrees == profile.degrees())
}
