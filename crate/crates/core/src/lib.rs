//! Exact determinants of "all-ones plus diagonal" matrices.
//!
//! The matrix `J + diag(a)` (ones everywhere, `1 + a_k` on the diagonal) has
//! determinant `(1 + Σ 1/a_k) · ∏ a_k`. This crate evaluates it several
//! independent ways over arbitrary-precision integers, and uses it to produce
//! the sequence of determinants whose diagonals hold the first `n` primes
//! (OEIS A067549: 2, 5, 22, 140, 1448, 17856, ...).
//!
//! ```
//! use structdet::{det_expanded, DiagonalShifts};
//!
//! let shifts = DiagonalShifts::from_i64s(&[1, 2, 4]).unwrap();
//! assert_eq!(det_expanded(&shifts), 22.into());
//! ```

pub mod cli;
pub mod error;
pub mod prime_sequence;
pub mod primes;
pub mod structured_det;

pub use error::{Error, Result};
pub use prime_sequence::{
    prime_det, prime_det_sequence, verify_sequence, SequenceRecord, VerificationReport,
    VerifyOptions, KNOWN_VALUES,
};
pub use primes::{first_n_primes, nth_prime, PrimeCache};
pub use structured_det::{
    det_bareiss, det_closed_form, det_elimination, det_expanded, materialize_matrix,
    DiagonalShifts, EliminationTrace, StructuredMatrix,
};
