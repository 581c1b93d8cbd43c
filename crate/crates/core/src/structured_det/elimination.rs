use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::DiagonalShifts;
use crate::error::{Error, Result};

/// Intermediate state of the two-step reduction of `J + diag(a)`.
///
/// After the row step (`r_i -= r_1` for `i >= 2`) the matrix is an arrowhead:
/// first row `(1 + a_1, 1, ..., 1)`, first column `(1 + a_1, -a_1, ..., -a_1)`,
/// diagonal `a_2, ..., a_n`, zeros elsewhere. The column step
/// (`c_1 += (a_1 / a_i) c_i` for `i >= 2`) clears the first column below the
/// pivot, leaving an upper triangular matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationTrace {
    /// First column after the row step.
    pub first_column_after_rows: Vec<BigInt>,
    /// First column after the column step: `(b, 0, ..., 0)`.
    pub first_column_after_columns: Vec<BigRational>,
    /// `a_2, ..., a_n`, untouched by both steps.
    pub diagonal_tail: Vec<BigInt>,
    /// The (1,1) entry `b = a_1 (1 + Σ 1/a_k)` after both steps.
    pub pivot_b: BigRational,
    /// `b · a_2 ⋯ a_n`.
    pub final_value: BigRational,
}

/// Determinant by replaying the row step and then the column step on the
/// arrowhead form, returning the value together with the trace.
///
/// Every `a_k` must be nonzero since the column step divides by `a_i`.
pub fn det_elimination(shifts: &DiagonalShifts) -> Result<(BigInt, EliminationTrace)> {
    if let Some(i) = shifts.first_zero() {
        return Err(Error::EliminationZeroShift { index: i + 1 });
    }
    let n = shifts.len();
    let a = shifts.as_slice();
    // Entries of J + diag(a), read on demand so the replay stays O(n) in memory.
    let entry = |i: usize, j: usize| -> BigInt {
        if i == j {
            BigInt::one() + &a[i]
        } else {
            BigInt::one()
        }
    };

    // Row step. Below row 1 only the first column and the diagonal survive;
    // every other entry becomes 1 - 1 = 0.
    let mut first_col: Vec<BigInt> = Vec::with_capacity(n);
    first_col.push(entry(0, 0));
    let mut diagonal_tail = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        first_col.push(entry(i, 0) - entry(0, 0));
        diagonal_tail.push(entry(i, i) - entry(0, i));
    }

    // Column step. Column i holds 1 in row 1 and a_i in row i.
    let a1 = BigRational::from_integer(a[0].clone());
    let mut col: Vec<BigRational> = first_col
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    for i in 1..n {
        let ai = BigRational::from_integer(diagonal_tail[i - 1].clone());
        let factor = &a1 / &ai;
        col[0] += &factor;
        col[i] += &factor * &ai;
    }
    debug_assert!(col[1..].iter().all(Zero::is_zero));

    let pivot_b = col[0].clone();
    let final_value = diagonal_tail.iter().fold(pivot_b.clone(), |acc, d| {
        acc * BigRational::from_integer(d.clone())
    });
    debug_assert!(final_value.is_integer());
    let value = final_value.to_integer();

    Ok((
        value,
        EliminationTrace {
            first_column_after_rows: first_col,
            first_column_after_columns: col,
            diagonal_tail,
            pivot_b,
            final_value,
        },
    ))
}

impl EliminationTrace {
    /// `b` rendered as a reduced fraction, e.g. `11/4`, or an integer when the
    /// denominator is one.
    pub fn pivot_fraction(&self) -> String {
        if self.pivot_b.denom().is_one() {
            self.pivot_b.numer().to_string()
        } else {
            format!("{}/{}", self.pivot_b.numer(), self.pivot_b.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn three_by_three() {
        let s = DiagonalShifts::from_i64s(&[1, 2, 4]).unwrap();
        let (v, t) = det_elimination(&s).unwrap();
        assert_eq!(v, 22.into());
        // 1 * (1 + 1 + 1/2 + 1/4)
        assert_eq!(t.pivot_b, ratio(11, 4));
        assert_eq!(t.pivot_fraction(), "11/4");
        assert_eq!(t.final_value, ratio(22, 1));
        assert_eq!(
            t.first_column_after_rows,
            vec![BigInt::from(2), BigInt::from(-1), BigInt::from(-1)]
        );
        assert_eq!(t.diagonal_tail, vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(
            t.first_column_after_columns,
            vec![ratio(11, 4), ratio(0, 1), ratio(0, 1)]
        );
    }

    #[test]
    fn one_by_one_performs_no_steps() {
        let (v, t) = det_elimination(&DiagonalShifts::from_i64s(&[1]).unwrap()).unwrap();
        assert_eq!(v, 2.into());
        assert_eq!(t.pivot_b, ratio(2, 1));
        assert_eq!(t.pivot_fraction(), "2");
        assert!(t.diagonal_tail.is_empty());
    }

    #[test]
    fn two_by_two() {
        let (v, t) = det_elimination(&DiagonalShifts::from_i64s(&[2, 3]).unwrap()).unwrap();
        assert_eq!(v, 11.into());
        // 2 * (1 + 1/2 + 1/3) = 11/3, and 11/3 * 3 = 11
        assert_eq!(t.pivot_b, ratio(11, 3));
    }

    #[test]
    fn negative_shift_sign_lives_in_numerator() {
        let (v, t) = det_elimination(&DiagonalShifts::from_i64s(&[1, -2]).unwrap()).unwrap();
        // [[2,1],[1,-1]]
        assert_eq!(v, (-3).into());
        // 1 * (1 + 1 - 1/2) = 3/2
        assert_eq!(t.pivot_b, ratio(3, 2));
        let (_, t) = det_elimination(&DiagonalShifts::from_i64s(&[-3, 2]).unwrap()).unwrap();
        // -3 * (1 - 1/3 + 1/2) = -7/2
        assert_eq!(t.pivot_fraction(), "-7/2");
    }

    #[test]
    fn zero_shift_rejected() {
        let err = det_elimination(&DiagonalShifts::from_i64s(&[1, 2, 0]).unwrap()).unwrap_err();
        assert_eq!(err, Error::EliminationZeroShift { index: 3 });
        assert!(err
            .to_string()
            .starts_with("elimination step divides by a_i"));
    }
}
