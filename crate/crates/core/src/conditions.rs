//! Combinatorial criteria for the existence of a quasihomogeneous polynomial
//! with an isolated singularity at 0.
//!
//! A support set `R` lives in the degree-`d` slice of `ℕ₀ⁿ`. For an index set
//! `J` two kinds of questions are asked: does `R` contain a monomial in the
//! variables of `J` only, and for a given `k`, does `R` contain a monomial
//! `x_k·x^α` with `α` supported on `J` (i.e. `R_k ∩ ℕ₀^J ≠ ∅`). All five
//! conditions below are quantifier patterns over those two predicates.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::weights::{WeightSystem, MAX_VARS};

/// Which of the equivalent formulations to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    C1,
    C1Prime,
    C2,
    C2Prime,
    C3,
}

impl Condition {
    pub const ALL: [Condition; 5] =
        [Condition::C1, Condition::C1Prime, Condition::C2, Condition::C2Prime, Condition::C3];
}

/// A support set `R`, either listed explicitly or the full slice `(ℕ₀ⁿ)_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportSet {
    Full,
    Explicit(BTreeSet<Vec<u64>>),
}

impl SupportSet {
    /// Explicit support; every exponent vector must have weighted degree `d`.
    pub fn explicit(ws: &WeightSystem, elements: impl IntoIterator<Item = Vec<u64>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for alpha in elements {
            if alpha.len() != ws.n() {
                return Err(Error::PreconditionViolated(format!(
                    "exponent vector {alpha:?} has length {} but n = {}",
                    alpha.len(),
                    ws.n()
                )));
            }
            let deg: u64 = alpha.iter().zip(ws.weights()).map(|(a, v)| a * v).sum();
            if deg != ws.degree() {
                return Err(Error::PreconditionViolated(format!(
                    "exponent vector {alpha:?} has weighted degree {deg}, expected {}",
                    ws.degree()
                )));
            }
            set.insert(alpha);
        }
        Ok(SupportSet::Explicit(set))
    }

    pub fn len(&self) -> Option<usize> {
        match self {
            SupportSet::Full => None,
            SupportSet::Explicit(s) => Some(s.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SupportSet::Explicit(s) if s.is_empty())
    }
}

/// Failing index sets, 0-based. For (C3) both `I` and `J` are reported.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub j: Vec<usize>,
    pub i: Option<Vec<usize>>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn one_based(s: &[usize]) -> String {
            let parts: Vec<String> = s.iter().map(|x| (x + 1).to_string()).collect();
            format!("{{{}}}", parts.join(","))
        }
        if let Some(i) = &self.i {
            write!(f, "I={}, ", one_based(i))?;
        }
        write!(f, "J={}", one_based(&self.j))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl ConditionReport {
    fn pass() -> Self {
        Self { verdict: true, witness: None }
    }

    fn fail(j: u32, i: Option<u32>) -> Self {
        Self { verdict: false, witness: Some(Witness { j: indices(j), i: i.map(indices) }) }
    }
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// Nonempty subsets of `{0..n}` as bitmasks, by size and then lexicographically
/// on their sorted elements. Failing witnesses are the first in this order.
pub(crate) fn subsets_in_order(n: usize) -> &'static [u32] {
    static TABLE: OnceLock<Vec<Vec<u32>>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        (0..=MAX_VARS)
            .map(|n| {
                let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
                masks.sort_by_key(|&m| (m.count_ones(), indices(m)));
                masks
            })
            .collect()
    });
    &table[n]
}

/// Is `k` in the additive monoid generated by `values`? Dynamic programming over `0..=k`.
pub fn semigroup_member(values: &[u64], k: u64) -> bool {
    reachable_upto(values, k)[k as usize]
}

fn reachable_upto(values: &[u64], limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for &v in values {
        let v = v as usize;
        if v == 0 {
            continue;
        }
        for x in v..=limit {
            if reach[x - v] {
                reach[x] = true;
            }
        }
    }
    reach
}

/// The two membership predicates every condition is built from.
trait Predicates {
    fn n(&self) -> usize;
    /// `R ∩ ℕ₀^J ≠ ∅`
    fn hits(&self, j: u32) -> bool;
    /// `R_k ∩ ℕ₀^J ≠ ∅`
    fn hits_shifted(&self, k: usize, j: u32) -> bool;
}

/// Full support: both predicates reduce to numerical-semigroup membership,
/// with one reachability table per `J` shared across all `k`.
struct FullPredicates<'a> {
    ws: &'a WeightSystem,
    cache: RefCell<Vec<Option<Vec<bool>>>>,
}

impl<'a> FullPredicates<'a> {
    fn new(ws: &'a WeightSystem) -> Self {
        Self { ws, cache: RefCell::new(vec![None; 1 << ws.n()]) }
    }

    fn member(&self, j: u32, target: u64) -> bool {
        if j.count_ones() == 1 {
            return target.is_multiple_of(self.ws.weight(j.trailing_zeros() as usize));
        }
        let mut cache = self.cache.borrow_mut();
        let reach = cache[j as usize].get_or_insert_with(|| {
            let values: Vec<u64> = indices(j).into_iter().map(|i| self.ws.weight(i)).collect();
            reachable_upto(&values, self.ws.degree())
        });
        reach[target as usize]
    }
}

impl Predicates for FullPredicates<'_> {
    fn n(&self) -> usize {
        self.ws.n()
    }

    fn hits(&self, j: u32) -> bool {
        self.member(j, self.ws.degree())
    }

    fn hits_shifted(&self, k: usize, j: u32) -> bool {
        self.member(j, self.ws.degree() - self.ws.weight(k))
    }
}

struct ExplicitPredicates {
    n: usize,
    /// Support mask of each element.
    supports: Vec<u32>,
    /// For each `k`: `supp(α - e_k)` over all elements with `α_k ≥ 1`.
    shifted: Vec<Vec<u32>>,
}

impl ExplicitPredicates {
    fn new(n: usize, elements: &BTreeSet<Vec<u64>>) -> Self {
        let mut supports = Vec::new();
        let mut shifted = vec![Vec::new(); n];
        for alpha in elements {
            let mask = alpha
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .fold(0u32, |m, (i, _)| m | 1 << i);
            supports.push(mask);
            for (k, &a) in alpha.iter().enumerate() {
                if a >= 1 {
                    let m = if a == 1 { mask & !(1 << k) } else { mask };
                    shifted[k].push(m);
                }
            }
        }
        Self { n, supports, shifted }
    }
}

impl Predicates for ExplicitPredicates {
    fn n(&self) -> usize {
        self.n
    }

    fn hits(&self, j: u32) -> bool {
        self.supports.iter().any(|&s| s & !j == 0)
    }

    fn hits_shifted(&self, k: usize, j: u32) -> bool {
        self.shifted[k].iter().any(|&s| s & !j == 0)
    }
}

fn evaluate(p: &dyn Predicates, which: Condition) -> ConditionReport {
    let n = p.n();
    let full: u32 = (1u32 << n) - 1;
    let primed = matches!(which, Condition::C1Prime | Condition::C2Prime);
    let count_shifted =
        |j: u32, pool: u32| (0..n).filter(|&k| pool >> k & 1 == 1 && p.hits_shifted(k, j)).count();
    let subsets = subsets_in_order(n);
    match which {
        Condition::C1 | Condition::C1Prime | Condition::C2 | Condition::C2Prime => {
            for &j in subsets {
                let size = j.count_ones() as usize;
                if primed && 2 * size > n + 1 {
                    break;
                }
                let ok = match which {
                    Condition::C1 | Condition::C1Prime => {
                        p.hits(j) || count_shifted(j, full & !j) >= size
                    }
                    _ => count_shifted(j, full) >= size,
                };
                if !ok {
                    return ConditionReport::fail(j, None);
                }
            }
            ConditionReport::pass()
        }
        Condition::C3 => {
            // Literal double quantifier over I and J, including I = ∅.
            for &j in subsets {
                let size = j.count_ones();
                let shifted_hits = (0..n).filter(|&k| p.hits_shifted(k, j)).fold(0u32, |m, k| m | 1 << k);
                for i in std::iter::once(0u32).chain(subsets.iter().copied()) {
                    if i.count_ones() >= size {
                        continue;
                    }
                    let ok = shifted_hits & !i != 0;
                    if !ok {
                        return ConditionReport::fail(j, Some(i));
                    }
                }
            }
            ConditionReport::pass()
        }
    }
}

/// Evaluates one of the conditions (C1), (C1)', (C2), (C2)', (C3) for `R`.
pub fn check_condition(ws: &WeightSystem, support: &SupportSet, which: Condition) -> ConditionReport {
    match support {
        SupportSet::Full => evaluate(&FullPredicates::new(ws), which),
        SupportSet::Explicit(elements) => {
            evaluate(&ExplicitPredicates::new(ws.n(), elements), which)
        }
    }
}

/// Existence of a quasihomogeneous polynomial with this weight system and an
/// isolated singularity at 0, decided through (C1)' on the full support.
pub fn is_is3(ws: &WeightSystem) -> bool {
    check_condition(ws, &SupportSet::Full, Condition::C1Prime).verdict
}

/// Existence of such a polynomial with support inside the explicit set `R`.
pub fn is_is2(ws: &WeightSystem, support: &SupportSet) -> Result<bool> {
    match support {
        SupportSet::Full => Err(Error::PreconditionViolated("is_is2 needs an explicit support".into())),
        SupportSet::Explicit(_) => Ok(check_condition(ws, support, Condition::C2Prime).verdict),
    }
}

/// For every nonempty `J`, `gcd(v_j : j ∈ J)` must divide at least `|J|` of
/// the numbers `d - v_k`. Equivalent to the Poincaré series being a polynomial.
pub fn check_gcd_condition(ws: &WeightSystem) -> ConditionReport {
    let n = ws.n();
    for &j in subsets_in_order(n) {
        let g = indices(j).into_iter().fold(0, |g, i| gcd(g, ws.weight(i)));
        let hits = ws.weights().iter().filter(|&&v| (ws.degree() - v).is_multiple_of(g)).count();
        if hits < j.count_ones() as usize {
            return ConditionReport::fail(j, None);
        }
    }
    ConditionReport::pass()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::from_slice(v).unwrap()
    }

    #[test]
    fn semigroup_examples() {
        assert!(!semigroup_member(&[2, 3], 1));
        assert!(semigroup_member(&[2, 3], 7));
        assert!(semigroup_member(&[2, 3], 0));
        for (a, b) in [(3u64, 5u64), (4, 7), (5, 9), (2, 11)] {
            let frob = a * b - a - b;
            assert!(!semigroup_member(&[a, b], frob));
            for k in frob + 1..frob + 2 * a * b {
                assert!(semigroup_member(&[a, b], k), "{a},{b}: {k}");
            }
        }
    }

    #[test]
    fn ivlev_fails_c1_on_pair() {
        let r = check_condition(&ws(&[1, 33, 58, 24, 265]), &SupportSet::Full, Condition::C1);
        assert!(!r.verdict);
        assert_eq!(r.witness.as_ref().unwrap().j, vec![1, 3]);
        assert_eq!(r.witness.unwrap().to_string(), "J={2,4}");
        assert!(!is_is3(&ws(&[1, 33, 58, 24, 265])));
        assert!(check_gcd_condition(&ws(&[1, 33, 58, 24, 265])).verdict);
    }

    #[test]
    fn minimal_system_passes_everything() {
        let w = ws(&[1, 1, 1, 3]);
        for c in Condition::ALL {
            assert!(check_condition(&w, &SupportSet::Full, c).verdict, "{c:?}");
        }
        assert!(is_is3(&w));
        assert!(check_gcd_condition(&w).verdict);
    }

    #[test]
    fn d5_support() {
        let w = ws(&[2, 3, 8]);
        let r = SupportSet::explicit(&w, [vec![4, 0], vec![1, 2]]).unwrap();
        for c in Condition::ALL {
            assert!(check_condition(&w, &r, c).verdict, "{c:?}");
        }
        assert!(is_is2(&w, &r).unwrap());
    }

    #[test]
    fn fermat_sum() {
        assert!(is_is3(&ws(&[1, 2, 6])));
    }

    #[test]
    fn shared_target_support_fails() {
        // x1^2·x3 + x2^4·x3: both arrows point at x3, so J = {1,2} fails.
        let w = ws(&[2, 1, 2, 6]);
        let r = SupportSet::explicit(&w, [vec![2, 0, 1], vec![0, 4, 1]]).unwrap();
        assert!(!is_is2(&w, &r).unwrap());
    }

    #[test]
    fn empty_support_fails() {
        let w = ws(&[1, 3]);
        let r = SupportSet::explicit(&w, Vec::<Vec<u64>>::new()).unwrap();
        assert!(!is_is2(&w, &r).unwrap());
        for c in Condition::ALL {
            assert!(!check_condition(&w, &r, c).verdict);
        }
    }

    #[test]
    fn support_degree_validated() {
        let w = ws(&[2, 3, 8]);
        assert!(SupportSet::explicit(&w, [vec![3, 0]]).is_err());
        assert!(SupportSet::explicit(&w, [vec![4]]).is_err());
    }

    #[test]
    fn gcd_failure_found_by_scan() {
        // Smallest failing systems found by scanning d and sorted v with n = 2;
        // each must also have a non-polynomial Poincaré series.
        let mut found = Vec::new();
        for d in 3..30u64 {
            for a in 1..d {
                for b in a..d {
                    let w = ws(&[a, b, d]);
                    if !check_gcd_condition(&w).verdict {
                        assert_eq!(w.poincare_series(), Err(Error::NotPolynomial));
                        found.push((a, b, d));
                    }
                }
            }
        }
        assert_eq!(found[0], (2, 2, 3));
        let r = check_gcd_condition(&ws(&[2, 4, 5]));
        assert!(!r.verdict);
        assert_eq!(r.witness.unwrap().j, vec![0]);
    }

    #[test]
    fn c3_reports_both_sets() {
        let w = ws(&[1, 3]);
        let r = SupportSet::explicit(&w, Vec::<Vec<u64>>::new()).unwrap();
        let rep = check_condition(&w, &r, Condition::C3);
        assert_eq!(rep.witness, Some(Witness { j: vec![0], i: Some(vec![]) }));
    }

    #[test]
    fn subset_order() {
        let order: Vec<Vec<usize>> = subsets_in_order(3).iter().map(|&m| indices(m)).collect();
        assert_eq!(
            order,
            vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]
        );
    }
}
