//! Milnor numbers above `2ⁿ` that no weight system attains.

use std::collections::BTreeSet;

use crate::arith::is_prime;
use crate::error::{Error, Result};

use super::{enumerate, EnumerateOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    pub mu: u64,
    /// Of the form `2p + (-1)ⁿ` with `p` and the value itself prime.
    pub sophie_germain: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapReport {
    pub n: usize,
    /// Scanned range `(2ⁿ, mu_max]`.
    pub lower_exclusive: u64,
    pub mu_max: u64,
    pub gaps: Vec<Gap>,
}

impl GapReport {
    pub fn values(&self) -> Vec<u64> {
        self.gaps.iter().map(|g| g.mu).collect()
    }
}

fn two_pow(n: usize) -> Result<u64> {
    1u64.checked_shl(n as u32)
        .filter(|_| n < 64)
        .ok_or_else(|| Error::PreconditionViolated(format!("2^{n} exceeds u64")))
}

/// Gaps in `(2ⁿ, mu_max]`, each flagged by membership in [`sophie_germain_gap_set`].
pub fn find_gaps(n: usize, mu_max: u64, opts: &EnumerateOptions) -> Result<GapReport> {
    let lower = two_pow(n)?;
    let attained: BTreeSet<u64> = enumerate(n, mu_max, opts)?.iter().map(|r| r.mu).collect();
    let sg = if n >= 3 { sophie_germain_gap_set(n, mu_max)? } else { BTreeSet::new() };
    let gaps = (lower + 1..=mu_max)
        .filter(|mu| !attained.contains(mu))
        .map(|mu| Gap { mu, sophie_germain: sg.contains(&mu) })
        .collect();
    Ok(GapReport { n, lower_exclusive: lower, mu_max, gaps })
}

/// `{2p + (-1)ⁿ : p and 2p + (-1)ⁿ prime} ∩ (2ⁿ, mu_max]`.
pub fn sophie_germain_gap_set(n: usize, mu_max: u64) -> Result<BTreeSet<u64>> {
    if n < 3 {
        return Err(Error::PreconditionViolated(format!("the prime gap family needs n >= 3, got {n}")));
    }
    let lower = two_pow(n)?;
    Ok((lower + 1..=mu_max)
        .filter(|&q| {
            let p2 = if n.is_multiple_of(2) { q - 1 } else { q + 1 };
            p2 % 2 == 0 && is_prime(p2 / 2) && is_prime(q)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> BTreeSet<u64> {
        xs.iter().copied().collect()
    }

    #[test]
    fn sophie_germain_examples() {
        assert_eq!(sophie_germain_gap_set(3, 100).unwrap(), set(&[13, 37, 61, 73]));
        assert_eq!(sophie_germain_gap_set(4, 100).unwrap(), set(&[23, 47, 59, 83]));
        assert!(sophie_germain_gap_set(3, 10).unwrap().is_empty());
        assert!(sophie_germain_gap_set(2, 10).is_err());
    }

    #[test]
    fn oracle_by_prime_list() {
        let primes: Vec<u64> = (2..400).filter(|&p| is_prime(p)).collect();
        for n in 3..=6usize {
            let expected: BTreeSet<u64> = primes
                .iter()
                .map(|&p| if n % 2 == 0 { 2 * p + 1 } else { 2 * p - 1 })
                .filter(|&q| is_prime(q) && q > 1 << n && q <= 300)
                .collect();
            assert_eq!(sophie_germain_gap_set(n, 300).unwrap(), expected);
        }
    }
}
