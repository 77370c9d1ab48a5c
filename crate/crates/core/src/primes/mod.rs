//! Primes up to a cutoff, von Mangoldt weights, and the exact prime sums that
//! the resonator's main terms are compared against.

mod cache;
mod sieve;
mod sums;

pub use cache::{build_prime_table_cached, read_cache, write_cache};
pub use sums::{asymptotic_gap, main_term, prime_sum, prime_sum_sequential, s3_integral_with_cutoff, PrimeSumKind};

use crate::error::{Error, Result};

/// Largest accepted sieve limit.
pub const MAX_LIMIT: u64 = 1 << 34;

/// All primes `≤ limit`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

/// A prime power `p^a ≤ limit` with its von Mangoldt weight `Λ(p^a) = log p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimePower {
    pub value: u64,
    pub prime: u64,
    pub exponent: u32,
    pub mangoldt: f64,
}

/// Sieves all primes up to `limit` (segmented, parallel over segments).
pub fn build_prime_table(limit: u64) -> Result<PrimeTable> {
    check_limit(limit)?;
    Ok(PrimeTable { limit, primes: sieve::segmented(limit) })
}

fn check_limit(limit: u64) -> Result<()> {
    if !(2..=MAX_LIMIT).contains(&limit) {
        return Err(Error::Capacity { what: "sieve limit", reached: limit, cap: MAX_LIMIT });
    }
    Ok(())
}

impl PrimeTable {
    pub(crate) fn from_parts(limit: u64, primes: Vec<u64>) -> Self {
        Self { limit, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Number of primes `≤ x` (for `x ≤ limit`).
    pub fn count_up_to(&self, x: u64) -> usize {
        self.primes.partition_point(|&p| p <= x)
    }

    /// Primes `p` with `lower < p ≤ upper`; `lower` may be fractional.
    pub fn range(&self, lower: f64, upper: u64) -> &[u64] {
        let start = self.primes.partition_point(|&p| (p as f64) <= lower);
        let end = self.primes.partition_point(|&p| p <= upper);
        if start >= end {
            &[]
        } else {
            &self.primes[start..end]
        }
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n <= self.limit && self.primes.binary_search(&n).is_ok()
    }

    /// Every prime power `p^a ≤ limit`, `a ≥ 1`, grouped by prime (prime-major order).
    pub fn prime_powers(&self) -> impl Iterator<Item = PrimePower> + '_ {
        let limit = self.limit;
        self.primes.iter().flat_map(move |&p| {
            let mangoldt = (p as f64).ln();
            let mut value = p;
            let mut exponent = 1;
            std::iter::from_fn(move || {
                if value > limit {
                    return None;
                }
                let out = PrimePower { value, prime: p, exponent, mangoldt };
                exponent += 1;
                value = value.saturating_mul(p);
                Some(out)
            })
        })
    }

    /// A copy restricted to primes `≤ limit`.
    pub fn truncated(&self, limit: u64) -> Result<PrimeTable> {
        check_limit(limit)?;
        if limit > self.limit {
            return Err(Error::precondition(format!("cannot extend a table sieved to {} up to {limit}", self.limit)));
        }
        let end = self.count_up_to(limit);
        Ok(PrimeTable { limit, primes: self.primes[..end].to_vec() })
    }

    pub(crate) fn require_limit(&self, needed: u64) -> Result<()> {
        if self.limit < needed {
            return Err(Error::precondition(format!("prime table sieved to {} but {needed} is required", self.limit)));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert_eq!(build_prime_table(10).unwrap().primes(), &[2, 3, 5, 7]);
        assert_eq!(build_prime_table(2).unwrap().primes(), &[2]);
        assert_eq!(build_prime_table(100).unwrap().len(), 25);
    }

    #[test]
    fn rejects_out_of_range_limits() {
        assert!(matches!(build_prime_table(1), Err(Error::Capacity { .. })));
        assert!(matches!(build_prime_table(MAX_LIMIT + 1), Err(Error::Capacity { .. })));
    }

    #[test]
    fn prime_powers_carry_log_p() {
        let t = build_prime_table(30).unwrap();
        let powers: Vec<_> = t.prime_powers().filter(|pp| pp.prime == 2).map(|pp| pp.value).collect();
        assert_eq!(powers, vec![2, 4, 8, 16]);
        let nine = t.prime_powers().find(|pp| pp.value == 9).unwrap();
        assert_eq!(nine.exponent, 2);
        assert!((nine.mangoldt - 3f64.ln()).abs() < 1e-15);
        assert_eq!(t.prime_powers().count(), 10 + 3 + 2 + 1); // π(30) + {4,8,16} + {9,27} + 25
    }

    #[test]
    fn range_uses_open_lower_bound() {
        let t = build_prime_table(100).unwrap();
        assert_eq!(t.range(10.0, 20), &[11, 13, 17, 19]);
        assert_eq!(t.range(11.0, 20), &[13, 17, 19]);
        assert_eq!(t.range(9.89, 12), &[11]);
        assert!(t.range(50.0, 40).is_empty());
    }

    #[test]
    fn truncation() {
        let t = build_prime_table(1000).unwrap();
        let s = t.truncated(100).unwrap();
        assert_eq!(s.len(), 25);
        assert_eq!(s.limit(), 100);
        assert!(t.truncated(2000).is_err());
    }
}
