//! On-demand prime generation with a segmented sieve of Eratosthenes.
//!
//! Indices are 1-based: `nth_prime(1) == 2`, `nth_prime(2) == 3`.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};

/// Width of one sieve segment, in integers.
const SEGMENT: u64 = 1 << 15;

#[derive(Debug, Default)]
struct Sieved {
    primes: Vec<u64>,
    /// Every prime below this bound is in `primes`.
    limit: u64,
}

impl Sieved {
    /// Sieves `[limit, limit + SEGMENT)` and appends the primes found.
    fn extend_segment(&mut self) {
        let lo = self.limit;
        let hi = lo + SEGMENT;
        let mut composite = vec![false; SEGMENT as usize];
        for v in lo..hi.min(2) {
            composite[(v - lo) as usize] = true;
        }

        if lo == 0 {
            // First segment: plain sieve, base primes come from the segment itself.
            let mut p = 2u64;
            while p * p < hi {
                if !composite[p as usize] {
                    let mut m = p * p;
                    while m < hi {
                        composite[m as usize] = true;
                        m += p;
                    }
                }
                p += 1;
            }
        } else {
            // All base primes (p² < hi) are already cached since sqrt(hi) < lo.
            for &p in self.primes.iter().take_while(|&&p| p * p < hi) {
                let mut m = (p * p).max(lo.div_ceil(p) * p);
                while m < hi {
                    composite[(m - lo) as usize] = true;
                    m += p;
                }
            }
        }

        self.primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| lo + i as u64),
        );
        self.limit = hi;
    }
}

/// A growable, thread-safe list of the primes `2, 3, 5, ...`.
///
/// Lookups behave as pure functions; the cache only ever grows.
#[derive(Debug, Default)]
pub struct PrimeCache {
    inner: RwLock<Sieved>,
}

impl PrimeCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of primes currently cached.
    pub fn len(&self) -> usize {
        self.inner
            .read()
            .expect("prime cache poisoned")
            .primes
            .len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn ensure(&self, count: usize) {
        if self.len() >= count {
            return;
        }
        let mut sieved = self.inner.write().expect("prime cache poisoned");
        while sieved.primes.len() < count {
            sieved.extend_segment();
        }
    }

    /// The `n`th prime, 1-based.
    pub fn nth_prime(&self, n: usize) -> Result<u64> {
        if n == 0 {
            return Err(Error::ZeroPrimeIndex);
        }
        self.ensure(n);
        Ok(self.inner.read().expect("prime cache poisoned").primes[n - 1])
    }

    /// `[p_1, ..., p_n]`; empty for `n == 0`.
    pub fn first_n_primes(&self, n: usize) -> Vec<u64> {
        self.ensure(n);
        self.inner.read().expect("prime cache poisoned").primes[..n].to_vec()
    }
}

/// Process-wide cache backing [`nth_prime`] and [`first_n_primes`].
pub fn shared() -> &'static PrimeCache {
    static CACHE: OnceLock<PrimeCache> = OnceLock::new();
    CACHE.get_or_init(PrimeCache::new)
}

pub fn nth_prime(n: usize) -> Result<u64> {
    shared().nth_prime(n)
}

pub fn first_n_primes(n: usize) -> Vec<u64> {
    shared().first_n_primes(n)
}
