//! The determinants `D_n` of `J + diag(p_1 − 1, ..., p_n − 1)`, i.e. the
//! matrix whose diagonal holds the first `n` primes (OEIS A067549).
//!
//! Two routes are provided. [`prime_det`] evaluates one term directly through
//! [`det_expanded`](crate::det_expanded). [`prime_det_sequence`] walks the
//! recurrence
//!
//! ```text
//! P_n = P_{n-1} · (p_n − 1)
//! D_n = (p_n − 1) · D_{n-1} + P_{n-1},      D_0 = P_0 = 1
//! ```
//!
//! which follows from `D_n = P_n + Σ_k P_n / (p_k − 1)`: multiplying
//! `D_{n-1}` by `p_n − 1` yields every term except the one omitting `p_n − 1`,
//! which is `P_{n-1}`.

mod bfile;
mod verify;

pub use bfile::{parse_bfile, BFileError};
pub use verify::{
    verify_sequence, TermCheck, VerificationReport, VerifyOptions, DEFAULT_ORACLE_CUTOFF,
};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::primes;
use crate::structured_det::{det_expanded, DiagonalShifts};

/// `D_1..D_6` as published alongside the sequence definition.
pub const KNOWN_VALUES: [u64; 6] = [2, 5, 22, 140, 1448, 17856];

/// One term of the sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub n: usize,
    /// `p_n`
    pub prime: u64,
    /// `P_n = ∏_{k≤n} (p_k − 1)`
    pub shift_product: BigInt,
    /// `D_n`
    pub value: BigInt,
}

/// Shifts `(p_1 − 1, ..., p_n − 1)`.
pub fn prime_shifts(n: usize) -> Result<DiagonalShifts> {
    if n == 0 {
        return Err(Error::ZeroSequenceIndex);
    }
    DiagonalShifts::new(
        primes::first_n_primes(n)
            .into_iter()
            .map(|p| BigInt::from(p - 1))
            .collect(),
    )
}

/// `D_n` evaluated directly from the structured determinant.
pub fn prime_det(n: usize) -> Result<BigInt> {
    Ok(det_expanded(&prime_shifts(n)?))
}

/// Incremental generator of [`SequenceRecord`]s starting at `n = 1`.
#[derive(Debug, Clone)]
pub struct PrimeDetSequence {
    n: usize,
    shift_product: BigInt,
    value: BigInt,
}

impl Default for PrimeDetSequence {
    fn default() -> Self {
        Self {
            n: 0,
            shift_product: BigInt::one(),
            value: BigInt::one(),
        }
    }
}

impl PrimeDetSequence {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Iterator for PrimeDetSequence {
    type Item = SequenceRecord;

    fn next(&mut self) -> Option<SequenceRecord> {
        self.n += 1;
        let prime = primes::nth_prime(self.n).expect("index starts at 1");
        let shift = BigInt::from(prime - 1);
        let value = &shift * &self.value + &self.shift_product;
        let shift_product = &self.shift_product * &shift;
        self.value = value.clone();
        self.shift_product = shift_product.clone();
        Some(SequenceRecord {
            n: self.n,
            prime,
            shift_product,
            value,
        })
    }
}

/// Records for `n = 1..=count`, computed by the recurrence.
pub fn prime_det_sequence(count: usize) -> Vec<SequenceRecord> {
    PrimeDetSequence::new().take(count).collect()
}
