//! Plain-text matrix files: one row per line, entries separated by
//! whitespace. Blank lines and lines starting with `#` are skipped; a file
//! with no rows is the 0×0 matrix.

use num_bigint::BigInt;
use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::seifert::{SeifertError, SeifertMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: row has {found} entries, expected {expected}")]
    Ragged { line: usize, found: usize, expected: usize },
    #[error(transparent)]
    Invalid(#[from] SeifertError),
}

pub fn parse_int_matrix(text: &str) -> Result<IntMatrix, MatrixFileError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>()
                    .map_err(|_| MatrixFileError::Syntax { line: idx + 1, message: format!("not an integer: {tok:?}") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(MatrixFileError::Ragged { line: idx + 1, found: row.len(), expected: first.len() });
            }
        }
        rows.push(row);
    }
    Ok(IntMatrix::from_rows(rows).expect("rows checked for equal length"))
}

pub fn parse_seifert_matrix(text: &str) -> Result<SeifertMatrix, MatrixFileError> {
    Ok(SeifertMatrix::new(parse_int_matrix(text)?)?)
}

/// Inverse of [`parse_int_matrix`].
pub fn format_int_matrix(m: &IntMatrix) -> String {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trefoil_with_comments() {
        let v = parse_seifert_matrix("# trefoil\n-1 1\n\n 0 -1 \n").unwrap();
        assert_eq!(v.alexander().to_string(), "t-1+t^-1");
        assert_eq!(parse_int_matrix(&format_int_matrix(v.matrix())).unwrap(), *v.matrix());
    }

    #[test]
    fn empty_file_is_empty_matrix() {
        let v = parse_seifert_matrix("").unwrap();
        assert_eq!(v.size(), 0);
        assert!(v.alexander().is_one());
        assert_eq!(parse_seifert_matrix("# nothing\n\n").unwrap().size(), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_int_matrix("1 2\n3 x\n"), Err(MatrixFileError::Syntax { line: 2, .. })));
        assert!(matches!(
            parse_int_matrix("1 2\n3\n"),
            Err(MatrixFileError::Ragged { line: 2, found: 1, expected: 2 })
        ));
        let odd = parse_seifert_matrix("1\n").unwrap_err();
        assert!(odd.to_string().contains("size must be even"));
        assert!(matches!(parse_seifert_matrix("1 2\n"), Err(MatrixFileError::Invalid(SeifertError::NotSquare { .. }))));
    }
}
