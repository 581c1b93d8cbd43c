use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact determinant of any square integer matrix by single-step Bareiss
/// elimination.
///
/// Step `k` replaces each trailing entry by
/// `(m[i][j]·m[k][k] − m[i][k]·m[k][j]) / m[k-1][k-1]`, and the division is
/// always exact. A zero pivot is replaced by swapping in a lower row with a
/// nonzero entry in the pivot column (flipping the sign); if there is none
/// the matrix is singular.
pub fn det_bareiss<R: AsRef<[BigInt]>>(matrix: &[R]) -> Result<BigInt> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if let Some((row, r)) = matrix
        .iter()
        .enumerate()
        .find(|(_, r)| r.as_ref().len() != n)
    {
        return Err(Error::NotSquare {
            rows: n,
            row,
            len: r.as_ref().len(),
        });
    }

    let mut m: Vec<Vec<BigInt>> = matrix.iter().map(|r| r.as_ref().to_vec()).collect();
    let mut negate = false;
    let mut prev_pivot = BigInt::one();

    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }

        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let (head, tail) = row.split_at_mut(k + 1);
            let lead = &head[k];
            for (j, v) in tail.iter_mut().enumerate() {
                let t = &*v * pivot - lead * &pivot_row[k + 1 + j];
                *v = t / &prev_pivot;
            }
        }
        prev_pivot = m[k][k].clone();
    }

    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured_det::{materialize_matrix, DiagonalShifts};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    /// Cofactor expansion along the first row.
    fn laplace(m: &[Vec<i128>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * laplace(&minor)
            })
            .sum()
    }

    #[test]
    fn identity() {
        let m = big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), 1.into());
    }

    #[test]
    fn two_by_two() {
        assert_eq!(det_bareiss(&big(&[&[3, 1], &[1, 4]])).unwrap(), 11.into());
    }

    #[test]
    fn structured_three_by_three() {
        let m = materialize_matrix(&DiagonalShifts::from_i64s(&[1, 2, 4]).unwrap());
        assert_eq!(det_bareiss(m.rows()).unwrap(), 22.into());
    }

    #[test]
    fn zero_pivot_swaps_rows() {
        // leading entry zero; det = -(1*1 - 0) ... computed by hand: -1
        let m = big(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_bareiss(&m).unwrap(), (-1).into());
        let m = big(&[&[0, 2, 1], &[0, 1, 3], &[4, 1, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), 20.into());
    }

    #[test]
    fn singular_column() {
        let m = big(&[&[0, 2, 1], &[0, 1, 3], &[0, 1, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), 0.into());
        let m = big(&[&[1, 1], &[1, 1]]);
        assert_eq!(det_bareiss(&m).unwrap(), 0.into());
    }

    #[test]
    fn shape_errors() {
        let empty: Vec<Vec<BigInt>> = vec![];
        assert_eq!(det_bareiss(&empty), Err(Error::EmptyMatrix));
        let m = big(&[&[1, 2], &[3]]);
        assert_eq!(
            det_bareiss(&m),
            Err(Error::NotSquare {
                rows: 2,
                row: 1,
                len: 1
            })
        );
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            // sparse-ish entries so zero pivots show up regularly
            let m: Vec<Vec<i128>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            if rng.gen_bool(0.4) {
                                0
                            } else {
                                rng.gen_range(-9..=9)
                            }
                        })
                        .collect()
                })
                .collect();
            let b: Vec<Vec<BigInt>> = m
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            assert_eq!(det_bareiss(&b).unwrap(), BigInt::from(laplace(&m)), "{m:?}");
        }
    }
}
