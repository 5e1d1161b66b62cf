//! Direct scan over degrees and weights, independent of the map-based search.

use crate::arith::gcd;
use crate::bounds::degree_ceiling;
use crate::conditions::is_is3;
use crate::error::{Error, Result};
use crate::weights::WeightSystem;

use super::{build_records, EnumerationRecord};

/// Every reduced sorted system with `n ≤ 3` variables, all `v_i < d/2`,
/// integral `μ ≤ mu_max` and an isolated singularity, found by looping over
/// `d ≤ ⌊l(n-1)·mu_max⌋` and all ascending weight tuples.
pub fn brute_force_enumerate(n: usize, mu_max: u64) -> Result<Vec<EnumerationRecord>> {
    if !(1..=3).contains(&n) || mu_max > 60 {
        return Err(Error::PreconditionViolated(format!(
            "brute force is limited to n <= 3 and mu_max <= 60, got n = {n}, mu_max = {mu_max}"
        )));
    }
    let mut found = Vec::new();
    for d in 2..=degree_ceiling(n, mu_max) {
        let mut v = vec![1u64; n];
        scan(d, 0, &mut v, mu_max, &mut found)?;
    }
    build_records(found)
}

fn scan(d: u64, pos: usize, v: &mut Vec<u64>, mu_max: u64, out: &mut Vec<WeightSystem>) -> Result<()> {
    if pos == v.len() {
        if v.iter().fold(d, |g, &x| gcd(g, x)) != 1 {
            return Ok(());
        }
        let num: u128 = v.iter().map(|&x| (d - x) as u128).product();
        let den: u128 = v.iter().map(|&x| x as u128).product();
        if !num.is_multiple_of(den) || num / den > mu_max as u128 {
            return Ok(());
        }
        let ws = WeightSystem::new(v.clone(), d)?;
        if is_is3(&ws) {
            out.push(ws);
        }
        return Ok(());
    }
    let start = if pos == 0 { 1 } else { v[pos - 1] };
    for x in start..d {
        if 2 * x >= d {
            break;
        }
        v[pos] = x;
        scan(d, pos + 1, v, mu_max, out)?;
    }
    Ok(())
}
