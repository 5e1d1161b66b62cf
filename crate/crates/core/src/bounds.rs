//! Upper bounds for the weighted degree in terms of the Milnor number.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use crate::arith::Rational;
use crate::weights::WeightSystem;

static PRIMES: RwLock<Vec<u64>> = RwLock::new(Vec::new());

/// Sieve of Eratosthenes below `limit`.
fn sieve(limit: usize) -> Vec<u64> {
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    if let Some(p) = PRIMES.read().ok().filter(|p| p.len() >= count) {
        return p[..count].to_vec();
    }
    let mut limit = 64;
    let mut primes = sieve(limit);
    while primes.len() < count {
        limit *= 2;
        primes = sieve(limit);
    }
    let mut table = PRIMES.write().expect("prime table poisoned");
    if table.len() < primes.len() {
        *table = primes;
    }
    table[..count].to_vec()
}

/// `l(n) = ∏_{i≤n} p_i/(p_i - 1)` over the first `n` primes; `l(0) = 1`.
pub fn l(n: usize) -> Rational {
    first_primes(n).iter().fold(Rational::one(), |acc, &p| {
        acc * Rational::new(BigInt::from(p), BigInt::from(p - 1))
    })
}

/// `l₂(n) = (3/2)(4/3)∏_{i=3}^{n} p_i/(p_i - 1)`, for `n ≥ 2`.
pub fn l2(n: usize) -> Rational {
    assert!(n >= 2, "l2 is defined for n >= 2");
    let head = Rational::new(BigInt::from(2), BigInt::one());
    first_primes(n)[2..].iter().fold(head, |acc, &p| {
        acc * Rational::new(BigInt::from(p), BigInt::from(p - 1))
    })
}

/// `d ≤ l(n)·μ`, and `d ≤ l(n-1)·μ` as well when every `v_i < d/2` and `n ≥ 2`.
pub fn check_degree_bound(ws: &WeightSystem) -> bool {
    let n = ws.n();
    let mu = ws.milnor_number();
    let d = Rational::from_integer(BigInt::from(ws.degree()));
    if d > l(n) * &mu {
        return false;
    }
    !(n >= 2 && ws.all_below_half() && d > l(n - 1) * mu)
}

/// Largest degree a system with `n` variables, all weights below `d/2` and
/// Milnor number at most `mu_max` can have: `⌊l(n-1)·mu_max⌋`, or `2·mu_max`
/// for `n = 1`.
pub fn degree_ceiling(n: usize, mu_max: u64) -> u64 {
    let factor = if n >= 2 { l(n - 1) } else { l(1) };
    (factor * Rational::from_integer(BigInt::from(mu_max)))
        .floor()
        .to_integer()
        .to_u64()
        .expect("degree ceiling fits u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{is_prime, rational};

    #[test]
    fn l_values() {
        let expected = [rational(2, 1), rational(3, 1), rational(15, 4), rational(35, 8), rational(77, 16)];
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(&l(i + 1), e);
        }
        assert_eq!(l(0), rational(1, 1));
    }

    #[test]
    fn l2_values() {
        assert_eq!(l2(2), rational(2, 1));
        assert_eq!(l2(3), rational(5, 2));
        assert_eq!(l2(4), rational(35, 12));
    }

    #[test]
    fn l_against_trial_division() {
        let primes: Vec<u64> = (2..200).filter(|&p| is_prime(p)).take(20).collect();
        let mut acc = rational(1, 1);
        for (i, &p) in primes.iter().enumerate() {
            acc *= rational(p as i64, p as i64 - 1);
            assert_eq!(l(i + 1), acc);
        }
    }

    #[test]
    fn l2_below_l() {
        for n in 2..=12 {
            assert!(l2(n + 1) <= l(n), "n = {n}");
            assert!(l(n) < l(n + 1));
        }
    }

    #[test]
    fn degree_bound_examples() {
        assert!(check_degree_bound(&WeightSystem::from_slice(&[1, 3]).unwrap()));
        assert!(check_degree_bound(&WeightSystem::from_slice(&[1, 1, 1, 3]).unwrap()));
        let big = WeightSystem::from_slice(&[30, 348, 580, 855, 1740]).unwrap();
        assert!(check_degree_bound(&big));
        let ratio = rational(1740, 1) / big.milnor_number();
        assert!(ratio > rational(368, 100) && ratio <= rational(15, 4));
    }

    #[test]
    fn ceilings() {
        assert_eq!(degree_ceiling(1, 10), 20);
        assert_eq!(degree_ceiling(2, 10), 20);
        assert_eq!(degree_ceiling(3, 10), 30);
        assert_eq!(degree_ceiling(4, 100), 375);
    }
}
