use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Every variant is a precondition violation; none is retryable.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("prime indices are 1-based")]
    ZeroPrimeIndex,

    #[error("sequence indices are 1-based")]
    ZeroSequenceIndex,

    #[error("a shift vector needs at least one entry")]
    EmptyShifts,

    /// `index` is 1-based.
    #[error("closed form requires nonzero shifts; use det_expanded (a_{index} = 0)")]
    ClosedFormZeroShift { index: usize },

    /// `index` is 1-based.
    #[error("elimination step divides by a_i (a_{index} = 0)")]
    EliminationZeroShift { index: usize },

    #[error("determinant of an empty matrix")]
    EmptyMatrix,

    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
}

impl Error {
    /// True for the zero-shift preconditions of the closed form and the elimination replay.
    pub fn is_zero_shift(&self) -> bool {
        matches!(
            self,
            Error::ClosedFormZeroShift { .. } | Error::EliminationZeroShift { .. }
        )
    }
}
