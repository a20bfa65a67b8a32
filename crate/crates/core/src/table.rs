//! Bundled example knots and CSV import of further polynomial-level rows.

use std::fmt;
use std::io::Read;

use num_bigint::BigInt;
use thiserror::Error;

use crate::laurent::LaurentPoly;
use crate::seifert::{KnotInvariants, SeifertError, SeifertMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("entry {label}: stored invariants differ from the computed ones ({field})")]
    SelfCheck { label: String, field: &'static str },
    #[error("entry {label}: {source}")]
    Invalid { label: String, source: SeifertError },
    #[error("row {row}: {message}")]
    Csv { row: usize, message: String },
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundledEntry {
    pub label: String,
    pub matrix: Option<SeifertMatrix>,
    pub expected: KnotInvariants,
}

impl fmt::Display for BundledEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "label: {}", self.label)?;
        match &self.matrix {
            Some(v) => writeln!(f, "matrix: {}", v.matrix())?,
            None => writeln!(f, "matrix: none (no Seifert matrix bundled)")?,
        }
        writeln!(f, "alexander: {}", self.expected.alexander)?;
        writeln!(f, "signature: {}", self.expected.signature)?;
        write!(f, "determinant: {}", self.expected.determinant)
    }
}

struct Raw {
    label: &'static str,
    matrix: Option<&'static [&'static [i64]]>,
    alexander: &'static str,
    signature: i64,
    determinant: i64,
}

const BUNDLED: &[Raw] = &[
    Raw { label: "3_1", matrix: Some(&[&[-1, 1], &[0, -1]]), alexander: "t-1+t^-1", signature: -2, determinant: 3 },
    Raw { label: "4_1", matrix: Some(&[&[1, 1], &[0, -1]]), alexander: "-t+3-t^-1", signature: 0, determinant: 5 },
    Raw { label: "9_25", matrix: None, alexander: "-3t^2+12t-17+12t^-1-3t^-2", signature: -2, determinant: 47 },
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    entries: Vec<BundledEntry>,
}

impl Table {
    /// The bundled entries, each re-derived from its data. Fails if any
    /// stored value disagrees.
    pub fn bundled() -> Result<Self, TableError> {
        let mut entries = Vec::new();
        for raw in BUNDLED {
            let alexander: LaurentPoly = raw.alexander.parse().expect("bundled polynomial parses");
            let expected = KnotInvariants::checked(alexander, raw.signature, BigInt::from(raw.determinant))
                .map_err(|source| TableError::Invalid { label: raw.label.into(), source })?;
            let matrix = match raw.matrix {
                Some(rows) => {
                    let v = SeifertMatrix::from_i64_rows(rows)
                        .map_err(|source| TableError::Invalid { label: raw.label.into(), source })?;
                    self_check(raw.label, &v, &expected)?;
                    Some(v)
                }
                None => None,
            };
            entries.push(BundledEntry { label: raw.label.into(), matrix, expected });
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[BundledEntry] {
        &self.entries
    }

    pub fn get(&self, label: &str) -> Result<&BundledEntry, TableError> {
        self.entries.iter().find(|e| e.label == label).ok_or_else(|| TableError::UnknownLabel(label.into()))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    /// Adds polynomial-level rows; labels must be new.
    pub fn extend(&mut self, rows: Vec<BundledEntry>) -> Result<(), TableError> {
        for row in rows {
            if self.entries.iter().any(|e| e.label == row.label) {
                return Err(TableError::DuplicateLabel(row.label));
            }
            self.entries.push(row);
        }
        Ok(())
    }
}

fn self_check(label: &str, v: &SeifertMatrix, expected: &KnotInvariants) -> Result<(), TableError> {
    let got = v.invariants();
    let field = if got.alexander != expected.alexander {
        "alexander"
    } else if got.signature != expected.signature {
        "signature"
    } else if got.determinant != expected.determinant {
        "determinant"
    } else {
        return Ok(());
    };
    Err(TableError::SelfCheck { label: label.into(), field })
}

/// Reads `label,polynomial,signature,determinant` rows. A first row whose
/// label is literally `label` is taken as a header.
pub fn import_csv<R: Read>(reader: R) -> Result<Vec<BundledEntry>, TableError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(reader);
    let mut out: Vec<BundledEntry> = Vec::new();
    for (idx, record) in rdr.records().enumerate() {
        let row = idx + 1;
        let err = |message: String| TableError::Csv { row, message };
        let record = record.map_err(|e| err(e.to_string()))?;
        if record.len() != 4 {
            return Err(err(format!("expected 4 fields, found {}", record.len())));
        }
        if row == 1 && &record[0] == "label" {
            continue;
        }
        let label = record[0].to_string();
        if label.is_empty() {
            return Err(err("empty label".into()));
        }
        let alexander: LaurentPoly = record[1].parse().map_err(|e| err(format!("polynomial: {e}")))?;
        let signature: i64 =
            record[2].parse().map_err(|_| err(format!("signature: not an integer: {:?}", &record[2])))?;
        let determinant: BigInt =
            record[3].parse().map_err(|_| err(format!("determinant: not an integer: {:?}", &record[3])))?;
        let expected = KnotInvariants::checked(alexander, signature, determinant)
            .map_err(|source| TableError::Invalid { label: label.clone(), source })?;
        if out.iter().any(|e| e.label == label) {
            return Err(TableError::DuplicateLabel(label));
        }
        out.push(BundledEntry { label, matrix: None, expected });
    }
    Ok(out)
}
