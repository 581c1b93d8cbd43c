use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::DiagonalShifts;
use crate::error::{Error, Result};

/// `(1 + Σ 1/a_k) · ∏ a_k`, evaluated over exact rationals.
///
/// Every `a_k` must be nonzero. The result is always an integer: the
/// denominator of the sum divides the product.
pub fn det_closed_form(shifts: &DiagonalShifts) -> Result<BigInt> {
    if let Some(i) = shifts.first_zero() {
        return Err(Error::ClosedFormZeroShift { index: i + 1 });
    }
    let a = shifts.as_slice();

    let reciprocal_sum = a.iter().fold(BigRational::zero(), |acc, ak| {
        acc + BigRational::new(BigInt::one(), ak.clone())
    });
    let product: BigInt = a.iter().product();
    let value = (BigRational::one() + reciprocal_sum) * BigRational::from_integer(product);

    debug_assert!(value.is_integer(), "closed form produced {value}");
    Ok(value.to_integer())
}

/// `∏ a_k + Σ_k ∏_{j≠k} a_j`, the closed form with the division cleared.
///
/// Total over all integer shifts, zeros included. One forward pass keeps the
/// running product `L = a_1 ⋯ a_k` and the running leave-one-out sum
/// `S = Σ_{i≤k} ∏_{j≤k, j≠i} a_j`, updated as `S ← S·a_k + L`, `L ← L·a_k`.
/// Each step multiplies a large value by a single shift, so the cost is `O(n)`
/// multiplications, none of them large by large.
pub fn det_expanded(shifts: &DiagonalShifts) -> BigInt {
    let mut product = BigInt::one();
    let mut leave_one_out = BigInt::zero();
    for ak in shifts.as_slice() {
        leave_one_out = leave_one_out * ak + &product;
        product *= ak;
    }
    product + leave_one_out
}

/// `∏_{j≠k} a_j` for every `k`, from prefix and suffix product arrays.
pub fn leave_one_out_products(shifts: &DiagonalShifts) -> Vec<BigInt> {
    let a = shifts.as_slice();
    let n = a.len();

    // prefix[k] = a_0 ⋯ a_{k-1}, suffix[k] = a_k ⋯ a_{n-1}
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(BigInt::one());
    for ak in a {
        let next = prefix.last().unwrap() * ak;
        prefix.push(next);
    }
    let mut suffix = vec![BigInt::one(); n + 1];
    for k in (0..n).rev() {
        suffix[k] = &suffix[k + 1] * &a[k];
    }

    (0..n).map(|k| &prefix[k] * &suffix[k + 1]).collect()
}
