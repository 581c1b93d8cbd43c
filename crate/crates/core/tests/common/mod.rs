#![allow(dead_code)]

use num_bigint::BigInt;

/// Cofactor expansion along the first row. Exponential; only for tiny `n`.
pub fn laplace_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 1 {
        return BigInt::from(m[0][0]);
    }
    let mut total = BigInt::from(0);
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][c]) * laplace_det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `J + diag(a)` built directly, independent of the library.
pub fn ones_plus_diag(a: &[i64]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1 + a[i] } else { 1 }).collect())
        .collect()
}

pub fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

pub fn is_prime_trial(v: u64) -> bool {
    v >= 2
        && (2..)
            .take_while(|d| d * d <= v)
            .all(|d| !v.is_multiple_of(d))
}
