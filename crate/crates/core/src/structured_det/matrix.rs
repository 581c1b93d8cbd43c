use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// The shifts `(a_1, ..., a_n)`, `n >= 1`. Entries may be zero or negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalShifts(Vec<BigInt>);

impl DiagonalShifts {
    pub fn new(shifts: Vec<BigInt>) -> Result<Self> {
        if shifts.is_empty() {
            return Err(Error::EmptyShifts);
        }
        Ok(Self(shifts))
    }

    pub fn from_i64s(shifts: &[i64]) -> Result<Self> {
        Self::new(shifts.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// Dimension of the matrix.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    /// 0-based position of the first zero shift, if any.
    pub fn first_zero(&self) -> Option<usize> {
        self.0
            .iter()
            .position(|a| a.sign() == num_bigint::Sign::NoSign)
    }
}

/// Parse error for the comma-separated shift syntax `1,2,-4`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseShiftsError {
    #[error("expected at least one integer")]
    Empty,
    #[error("invalid integer {token:?} at position {position}")]
    BadInteger { position: usize, token: String },
}

impl FromStr for DiagonalShifts {
    type Err = ParseShiftsError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(ParseShiftsError::Empty);
        }
        let shifts = s
            .split(',')
            .enumerate()
            .map(|(i, tok)| {
                tok.trim()
                    .parse::<BigInt>()
                    .map_err(|_| ParseShiftsError::BadInteger {
                        position: i + 1,
                        token: tok.to_string(),
                    })
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self(shifts))
    }
}

/// Dense `n × n` materialization of `J + diag(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl StructuredMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }
}

/// Rows of decimal integers, single-space separated, one row per line.
impl fmt::Display for StructuredMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{v}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub fn materialize_matrix(shifts: &DiagonalShifts) -> StructuredMatrix {
    let n = shifts.len();
    let rows = (0..n)
        .map(|i| {
            let mut row = vec![BigInt::one(); n];
            row[i] += &shifts.as_slice()[i];
            row
        })
        .collect();
    StructuredMatrix { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_rows(m: &StructuredMatrix) -> Vec<Vec<i64>> {
        m.rows()
            .iter()
            .map(|r| r.iter().map(|v| i64::try_from(v).unwrap()).collect())
            .collect()
    }

    #[test]
    fn materialize_examples() {
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[1, 2]).unwrap());
        assert_eq!(int_rows(&m), vec![vec![2, 1], vec![1, 3]]);
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[5]).unwrap());
        assert_eq!(int_rows(&m), vec![vec![6]]);
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[0, 0]).unwrap());
        assert_eq!(int_rows(&m), vec![vec![1, 1], vec![1, 1]]);
    }

    #[test]
    fn materialized_matrix_is_symmetric() {
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[3, -1, 0, 7]).unwrap());
        for i in 0..m.dim() {
            for j in 0..m.dim() {
                assert_eq!(m.get(i, j), m.get(j, i));
            }
        }
    }

    #[test]
    fn display_is_space_separated_rows() {
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[1, -3]).unwrap());
        assert_eq!(m.to_string(), "2 1\n1 -2\n");
    }

    #[test]
    fn empty_shifts_rejected() {
        assert_eq!(DiagonalShifts::new(vec![]), Err(Error::EmptyShifts));
    }

    #[test]
    fn parse() {
        let s: DiagonalShifts = "1, -2,30000000000000000000000".parse().unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.as_slice()[1], BigInt::from(-2));
        assert_eq!("".parse::<DiagonalShifts>(), Err(ParseShiftsError::Empty));
        assert!(matches!(
            "1,,2".parse::<DiagonalShifts>(),
            Err(ParseShiftsError::BadInteger { position: 2, .. })
        ));
        assert!("1,x".parse::<DiagonalShifts>().is_err());
    }

    #[test]
    fn first_zero() {
        assert_eq!(
            DiagonalShifts::from_i64s(&[1, 0, 0]).unwrap().first_zero(),
            Some(1)
        );
        assert_eq!(
            DiagonalShifts::from_i64s(&[1, 2]).unwrap().first_zero(),
            None
        );
    }
}
