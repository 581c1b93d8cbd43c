//! OEIS b-file reader: `#` comment lines, then `<n> <value>` per line.

use std::collections::BTreeMap;

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BFileError {
    #[error("line {line}: expected \"<n> <value>\", got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index must be a positive integer, got {text:?}")]
    BadIndex { line: usize, text: String },
    #[error("line {line}: value is not a decimal integer: {text:?}")]
    BadValue { line: usize, text: String },
    #[error("line {line}: index {n} listed twice")]
    Duplicate { line: usize, n: usize },
    #[error("no data lines")]
    Empty,
}

/// Parses b-file text into an index-to-value map. Blank lines are skipped.
pub fn parse_bfile(text: &str) -> Result<BTreeMap<usize, BigInt>, BFileError> {
    let mut values = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(idx), Some(val), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(BFileError::Malformed {
                line,
                text: raw.to_string(),
            });
        };
        let n = match idx.parse::<usize>() {
            Ok(n) if n >= 1 => n,
            _ => {
                return Err(BFileError::BadIndex {
                    line,
                    text: idx.to_string(),
                })
            }
        };
        let value = val.parse::<BigInt>().map_err(|_| BFileError::BadValue {
            line,
            text: val.to_string(),
        })?;
        if values.insert(n, value).is_some() {
            return Err(BFileError::Duplicate { line, n });
        }
    }
    if values.is_empty() {
        return Err(BFileError::Empty);
    }
    Ok(values)
}
