use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{prime_det, prime_det_sequence, prime_shifts};
use crate::error::{Error, Result};
use crate::structured_det::{det_bareiss, materialize_matrix};

pub const DEFAULT_ORACLE_CUTOFF: usize = 64;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Terms with `n <= oracle_cutoff` are also checked by Bareiss elimination.
    pub oracle_cutoff: usize,
    /// Externally supplied values, e.g. from a b-file.
    pub reference: Option<BTreeMap<usize, BigInt>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle_cutoff: DEFAULT_ORACLE_CUTOFF,
            reference: None,
        }
    }
}

/// Results of every method for one index `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermCheck {
    pub n: usize,
    pub recurrence: BigInt,
    pub direct: BigInt,
    pub oracle: Option<BigInt>,
    pub reference: Option<BigInt>,
}

impl TermCheck {
    pub fn direct_ok(&self) -> bool {
        self.direct == self.recurrence
    }

    pub fn oracle_ok(&self) -> bool {
        self.oracle.as_ref().is_none_or(|v| *v == self.recurrence)
    }

    pub fn reference_ok(&self) -> bool {
        self.reference
            .as_ref()
            .is_none_or(|v| *v == self.recurrence)
    }

    pub fn passed(&self) -> bool {
        self.direct_ok() && self.oracle_ok() && self.reference_ok()
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub terms: Vec<TermCheck>,
    pub oracle_cutoff: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.terms.iter().all(TermCheck::passed)
    }

    /// The smallest `n` at which any method disagrees.
    pub fn first_failure(&self) -> Option<&TermCheck> {
        self.terms.iter().find(|t| !t.passed())
    }

    pub fn oracle_checked(&self) -> usize {
        self.terms.iter().filter(|t| t.oracle.is_some()).count()
    }

    pub fn reference_checked(&self) -> usize {
        self.terms.iter().filter(|t| t.reference.is_some()).count()
    }
}

/// Cross-checks the recurrence, the direct evaluation and (up to the cutoff)
/// Bareiss elimination for `n = 1..=count`. Disagreement is reported, not
/// raised.
pub fn verify_sequence(count: usize, options: &VerifyOptions) -> Result<VerificationReport> {
    if count == 0 {
        return Err(Error::ZeroSequenceIndex);
    }
    let records = prime_det_sequence(count);

    let oracle_upto = options.oracle_cutoff.min(count);
    let oracle: Vec<BigInt> = (1..=oracle_upto)
        .into_par_iter()
        .map(|n| {
            let m = materialize_matrix(&prime_shifts(n)?);
            det_bareiss(m.rows())
        })
        .collect::<Result<_>>()?;

    let terms = records
        .into_iter()
        .map(|rec| {
            Ok(TermCheck {
                n: rec.n,
                direct: prime_det(rec.n)?,
                oracle: oracle.get(rec.n - 1).cloned(),
                reference: options
                    .reference
                    .as_ref()
                    .and_then(|r| r.get(&rec.n).cloned()),
                recurrence: rec.value,
            })
        })
        .collect::<Result<_>>()?;

    Ok(VerificationReport {
        terms,
        oracle_cutoff: options.oracle_cutoff,
    })
}
