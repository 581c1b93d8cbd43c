use std::hint::black_box;
use std::time::{Duration, Instant};

use super::Method;
use crate::prime_sequence::prime_shifts;
use crate::structured_det::{
    det_bareiss, det_closed_form, det_elimination, det_expanded, materialize_matrix,
};

/// Bareiss runs above this size are skipped unless forced.
pub const DEFAULT_BAREISS_CAP: usize = 400;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub method: Method,
    pub n: usize,
    pub median_seconds: f64,
}

fn median(mut samples: Vec<Duration>) -> f64 {
    samples.sort();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid].as_secs_f64()
    } else {
        (samples[mid - 1].as_secs_f64() + samples[mid].as_secs_f64()) / 2.0
    }
}

/// Times `method` on the prime-diagonal matrix of size `n`. Matrix
/// materialization for Bareiss is excluded from the measurement.
pub fn time_once(method: Method, n: usize) -> Duration {
    let shifts = prime_shifts(n).expect("n >= 1");
    match method {
        Method::Expanded => {
            let start = Instant::now();
            black_box(det_expanded(&shifts));
            start.elapsed()
        }
        Method::Closed => {
            let start = Instant::now();
            black_box(det_closed_form(&shifts).expect("prime shifts are nonzero"));
            start.elapsed()
        }
        Method::Elimination => {
            let start = Instant::now();
            black_box(det_elimination(&shifts).expect("prime shifts are nonzero"));
            start.elapsed()
        }
        Method::Bareiss => {
            let m = materialize_matrix(&shifts);
            let start = Instant::now();
            black_box(det_bareiss(m.rows()).expect("square"));
            start.elapsed()
        }
    }
}

/// Median wall time over `repeat` runs for each method and size, in method
/// order then size order. Bareiss sizes above `bareiss_cap` are reported to
/// `on_skip` and left out.
pub fn bench(
    sizes: &[usize],
    methods: &[Method],
    repeat: usize,
    bareiss_cap: Option<usize>,
    mut on_skip: impl FnMut(Method, usize),
) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for &method in methods {
        for &n in sizes {
            if method == Method::Bareiss && bareiss_cap.is_some_and(|cap| n > cap) {
                on_skip(method, n);
                continue;
            }
            let samples = (0..repeat.max(1)).map(|_| time_once(method, n)).collect();
            rows.push(BenchRow {
                method,
                n,
                median_seconds: median(samples),
            });
        }
    }
    rows
}
