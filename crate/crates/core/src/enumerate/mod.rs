//! Complete lists of weight systems with bounded Milnor number.
//!
//! Every reduced system with all `v_i < d/2` and an isolated singularity
//! admits a map `κ` with all exponents `a_j ≥ 2`, so sweeping exponent
//! assignments over all types of maps finds every system. The sweep for one
//! type stops as soon as a lower bound for `μ` exceeds the limit.

mod brute;
mod cache;
mod chain;
mod gaps;
mod search;

pub use brute::brute_force_enumerate;
pub use cache::{ShardCache, CACHE_VERSION};
pub use chain::{
    chain_charpoly, chain_denominators, chain_exponents, chain_fractions, chain_weight_system,
    classify_prime_mu, ChainSystem, PrimeMuAudit, PrimeMuEntry,
};
pub use gaps::{find_gaps, sophie_germain_gap_set, Gap, GapReport};

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::sync::atomic::AtomicU64;

use rayon::prelude::*;

use crate::arith::DivisorElement;
use crate::bounds::check_degree_bound;
use crate::error::{Error, Result};
use crate::graphs::{enumerate_types, kappa_choices, solve_weights, type_of, SolveOutcome};
use crate::weights::WeightSystem;

use search::Sweep;

/// Largest `n` accepted by [`enumerate`].
pub const MAX_ENUM_VARS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRecord {
    /// Reduced, weights ascending.
    pub system: WeightSystem,
    pub mu: u64,
    /// Labels of the types of all compatible maps, in type order.
    pub kappa_types: Vec<String>,
    pub charpoly: DivisorElement,
}

impl EnumerationRecord {
    pub fn n(&self) -> usize {
        self.system.n()
    }

    fn sort_key(&self) -> (u64, &[u64], u64) {
        (self.mu, self.system.weights(), self.system.degree())
    }
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Maximal number of search nodes; `None` for no limit.
    pub budget: Option<u64>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Directory for per-type result shards.
    pub cache_dir: Option<PathBuf>,
}

/// All reduced systems `(v_1 ≤ … ≤ v_n, d)` with `v_i < d/2`, an isolated
/// singularity and `μ ≤ mu_max`, sorted by `μ`, then `v`, then `d`.
pub fn enumerate(n: usize, mu_max: u64, opts: &EnumerateOptions) -> Result<Vec<EnumerationRecord>> {
    if !(1..=MAX_ENUM_VARS).contains(&n) {
        return Err(Error::PreconditionViolated(format!(
            "enumeration supports 1 <= n <= {MAX_ENUM_VARS}, got {n}"
        )));
    }
    match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::PreconditionViolated(format!("thread pool: {e}")))?
            .install(|| enumerate_in_pool(n, mu_max, opts)),
        None => enumerate_in_pool(n, mu_max, opts),
    }
}

fn enumerate_in_pool(n: usize, mu_max: u64, opts: &EnumerateOptions) -> Result<Vec<EnumerationRecord>> {
    let cache = opts.cache_dir.as_deref().map(ShardCache::open).transpose()?;
    let nodes = AtomicU64::new(0);
    let sweep = Sweep { mu_max, nodes: &nodes, budget: opts.budget.unwrap_or(u64::MAX) };
    let per_type = enumerate_types(n)?
        .par_iter()
        .map(|t| {
            if let Some(hit) = cache.as_ref().map(|c| c.load(n, mu_max, t.index)).transpose()?.flatten() {
                return Ok(hit);
            }
            let found = sweep.run(t)?;
            if let Some(c) = &cache {
                c.store(n, mu_max, t.index, &found)?;
            }
            Ok(found)
        })
        .collect::<Result<Vec<Vec<WeightSystem>>>>()?;
    let unique: BTreeSet<WeightSystem> = per_type.into_iter().flatten().collect();
    build_records(unique.into_iter().collect())
}

/// Attaches invariants to sorted reduced systems and checks the structural
/// facts every enumerated system must satisfy.
pub(crate) fn build_records(systems: Vec<WeightSystem>) -> Result<Vec<EnumerationRecord>> {
    let mut records = systems
        .into_par_iter()
        .map(record_for)
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    Ok(records)
}

fn record_for(ws: WeightSystem) -> Result<EnumerationRecord> {
    let fail = |what: String| Err(Error::InvariantViolation(format!("{ws}: {what}")));
    let Some(mu) = ws.milnor_integer() else {
        return fail("Milnor number is not an integer".into());
    };
    if !ws.is_reduced() || !ws.is_sorted() || !ws.all_below_half() {
        return fail("not reduced, sorted and below d/2".into());
    }
    if !check_degree_bound(&ws) {
        return fail("degree exceeds the bound".into());
    }
    let choices = kappa_choices(&ws);
    if choices.is_empty() {
        return fail("no compatible map".into());
    }
    let mut types = BTreeSet::new();
    for g in &choices {
        if solve_weights(g)? != SolveOutcome::System(ws.clone()) {
            return fail(format!("map {:?} with exponents {:?} solves differently", g.kappa(), g.exps()));
        }
        let t = type_of(g.kappa())?;
        types.insert((t.index, t.label.clone()));
    }
    let charpoly = ws.charpoly_milnor_orlik()?;
    if charpoly.degree() != mu as i64 {
        return fail(format!("characteristic polynomial {charpoly} has degree != {mu}"));
    }
    Ok(EnumerationRecord {
        kappa_types: types.into_iter().map(|(_, label)| label).collect(),
        system: ws,
        mu,
        charpoly,
    })
}

/// `Σ v_i = d`.
pub fn sum_weights_eq_d(ws: &WeightSystem) -> bool {
    ws.weights().iter().sum::<u64>() == ws.degree()
}

/// `2·(v_1 + v_2 + v_3) = d`, for `n = 3`.
pub fn sum3_eq_half_d(ws: &WeightSystem) -> bool {
    ws.n() == 3 && 2 * ws.weights().iter().sum::<u64>() == ws.degree()
}

/// Is there an injective `ν` from `{i : v_i > d/3}` to `{i : v_i < d/3}` with
/// `v_{ν(i)} = d - 2v_i`?
pub fn kreuzer_skarke_map(ws: &WeightSystem) -> bool {
    let d = ws.degree();
    let v = ws.weights();
    let big: Vec<usize> = (0..v.len()).filter(|&i| 3 * v[i] > d).collect();
    let small: Vec<usize> = (0..v.len()).filter(|&i| 3 * v[i] < d).collect();
    fn assign(k: usize, big: &[usize], small: &[usize], used: &mut [bool], v: &[u64], d: u64) -> bool {
        if k == big.len() {
            return true;
        }
        let target = d - 2 * v[big[k]];
        for (s, &i) in small.iter().enumerate() {
            if !used[s] && v[i] == target {
                used[s] = true;
                if assign(k + 1, big, small, used, v, d) {
                    return true;
                }
                used[s] = false;
            }
        }
        false
    }
    assign(0, &big, &small, &mut vec![false; small.len()], v, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::from_slice(v).unwrap()
    }

    #[test]
    fn small_counts() {
        let opts = EnumerateOptions::default();
        assert_eq!(enumerate(2, 50, &opts).unwrap().len(), 187);
        assert_eq!(enumerate(3, 50, &opts).unwrap().len(), 217);
        assert_eq!(enumerate(4, 50, &opts).unwrap().len(), 100);
    }

    #[test]
    fn first_record_is_minimal() {
        let opts = EnumerateOptions::default();
        for n in 1..=4 {
            let recs = enumerate(n, 20, &opts).unwrap();
            assert_eq!(recs[0].mu, 1 << n, "n = {n}");
            let mut expected = vec![1u64; n];
            expected.push(3);
            assert_eq!(recs[0].system, ws(&expected));
        }
    }

    #[test]
    fn output_is_sorted_and_unique() {
        let recs = enumerate(3, 60, &EnumerateOptions::default()).unwrap();
        for pair in recs.windows(2) {
            assert!(pair[0].sort_key() < pair[1].sort_key());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let opts = EnumerateOptions { budget: Some(100), ..Default::default() };
        assert_eq!(enumerate(3, 100, &opts), Err(Error::BudgetExceeded { budget: 100 }));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = EnumerateOptions { jobs: Some(1), ..Default::default() };
        let four = EnumerateOptions { jobs: Some(4), ..Default::default() };
        assert_eq!(enumerate(3, 80, &one).unwrap(), enumerate(3, 80, &four).unwrap());
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let opts = EnumerateOptions { cache_dir: Some(dir.path().to_path_buf()), ..Default::default() };
        let first = enumerate(2, 40, &opts).unwrap();
        let second = enumerate(2, 40, &opts).unwrap();
        assert_eq!(first, second);
        assert_eq!(first, enumerate(2, 40, &EnumerateOptions::default()).unwrap());
        assert!(dir.path().join("n2-mu40-t0.jsonl").exists());
    }

    #[test]
    fn kreuzer_skarke_examples() {
        // (2,3,8): 8/3 < 3 so v_2 = 3 is big; d - 2·3 = 2 = v_1.
        assert!(kreuzer_skarke_map(&ws(&[2, 3, 8])));
        assert!(kreuzer_skarke_map(&ws(&[1, 1, 1, 3])));
        assert!(!kreuzer_skarke_map(&ws(&[3, 3, 8])));
    }

    #[test]
    fn filters() {
        assert!(sum_weights_eq_d(&ws(&[1, 1, 1, 3])));
        assert!(sum3_eq_half_d(&ws(&[1, 1, 1, 6])));
        assert!(!sum3_eq_half_d(&ws(&[1, 1, 6])));
    }
}
