//! Compensated summation.
//!
//! All prime sums and normalizations go through [`CompensatedSum`], a
//! Neumaier-style accumulator. Parallel reductions split their input into
//! fixed-size blocks, sum each block on its own and merge the block results
//! in index order, so the result does not depend on the number of threads.

use std::iter::Sum;
use std::ops::AddAssign;

use rayon::prelude::*;

/// Block length for deterministic parallel reductions.
pub const REDUCTION_BLOCK: usize = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub const fn new() -> Self {
        Self { sum: 0.0, compensation: 0.0 }
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    /// Folds another partial sum into this one, carrying both its parts.
    pub fn merge(&mut self, other: CompensatedSum) {
        self.add(other.sum);
        self.add(other.compensation);
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for CompensatedSum {
    fn add_assign(&mut self, rhs: f64) {
        self.add(rhs);
    }
}

impl Sum<f64> for CompensatedSum {
    fn sum<I: Iterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Sums `term(x)` over `items` in parallel with a thread-count independent result.
pub fn par_sum_by<T, F>(items: &[T], term: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync,
{
    let partials: Vec<CompensatedSum> =
        items.par_chunks(REDUCTION_BLOCK).map(|block| block.iter().map(&term).sum()).collect();
    let mut total = CompensatedSum::new();
    for p in partials {
        total.merge(p);
    }
    total.value()
}

/// Sequential counterpart of [`par_sum_by`].
pub fn seq_sum_by<T, F>(items: &[T], term: F) -> f64
where
    F: Fn(&T) -> f64,
{
    items.iter().map(term).sum::<CompensatedSum>().value()
}
