//! Determinants of `J + diag(a)`, the matrix with `1 + a_k` on the diagonal
//! and ones everywhere else.
//!
//! Four routes are provided and are expected to agree exactly:
//!
//! * [`det_closed_form`]: `(1 + Σ 1/a_k) · ∏ a_k` over exact rationals;
//!   requires every `a_k != 0`.
//! * [`det_expanded`]: the division-free polynomial `∏ a_k + Σ_k ∏_{j≠k} a_j`,
//!   valid for all integer shifts, linear in `n`. The individual
//!   leave-one-out products are available from [`leave_one_out_products`].
//! * [`det_elimination`]: replays the two-step row/column reduction to an
//!   upper triangular matrix and reports the intermediate pivot.
//! * [`det_bareiss`]: generic fraction-free elimination on the materialized
//!   matrix, used as the independent oracle.

mod bareiss;
mod elimination;
mod formulas;
mod matrix;

pub use bareiss::det_bareiss;
pub use elimination::{det_elimination, EliminationTrace};
pub use formulas::{det_closed_form, det_expanded, leave_one_out_products};
pub use matrix::{materialize_matrix, DiagonalShifts, StructuredMatrix};
