//! Depth-first sweep over exponent assignments for one type.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::conditions::is_is3;
use crate::error::{Error, Result};
use crate::graphs::{cycles, solve_weights, KappaGraph, SolveOutcome, TypeClass};
use crate::weights::WeightSystem;

enum Component {
    /// A lone fixed point `x_j^{a_j+1}`.
    Fermat(usize),
    /// A cycle of length at least 2 with nothing attached.
    Cycle(Vec<usize>),
    /// A root or cycle `c1` with trees attached.
    Rooted { c1: Vec<usize>, internal: Vec<usize>, leaves: Vec<usize> },
}

pub(crate) struct Layout {
    kappa: Vec<usize>,
    components: Vec<Component>,
    /// Assignment order: roots and cycles, then inner tree vertices, then leaves.
    order: Vec<usize>,
}

impl Layout {
    pub(crate) fn new(kappa: &[usize]) -> Self {
        let n = kappa.len();
        let mut indeg = vec![0usize; n];
        for (j, &k) in kappa.iter().enumerate() {
            if j != k {
                indeg[k] += 1;
            }
        }
        let cycs = cycles(kappa);
        let comp_of = |mut v: usize| -> usize {
            // Walk forward until a cycle vertex is reached.
            for _ in 0..n {
                if let Some(i) = cycs.iter().position(|c| c.contains(&v)) {
                    return i;
                }
                v = kappa[v];
            }
            unreachable!("every vertex reaches a cycle")
        };
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); cycs.len()];
        for v in 0..n {
            members[comp_of(v)].push(v);
        }
        // Tree vertices in order of distance from the cycle.
        let depth = |mut v: usize| {
            let mut d = 0;
            while !cycs.iter().any(|c| c.contains(&v)) {
                v = kappa[v];
                d += 1;
            }
            d
        };
        let mut components = Vec::new();
        let mut head = Vec::new();
        let mut middle = Vec::new();
        let mut tail = Vec::new();
        for (cyc, mem) in cycs.iter().zip(&members) {
            head.extend(cyc.iter().copied());
            if mem.len() == cyc.len() {
                components.push(if cyc.len() == 1 {
                    Component::Fermat(cyc[0])
                } else {
                    Component::Cycle(cyc.clone())
                });
                continue;
            }
            let mut tree: Vec<usize> = mem.iter().copied().filter(|v| !cyc.contains(v)).collect();
            tree.sort_by_key(|&v| (depth(v), v));
            let (leaves, internal): (Vec<usize>, Vec<usize>) =
                tree.iter().partition(|&&v| indeg[v] == 0);
            middle.extend(internal.iter().copied());
            tail.extend(leaves.iter().copied());
            components.push(Component::Rooted { c1: cyc.clone(), internal, leaves });
        }
        let order = head.into_iter().chain(middle).chain(tail).collect();
        Self { kappa: kappa.to_vec(), components, order }
    }

    /// Lower bound for `μ` valid whenever all `a_j ≥ 2`; nondecreasing in every `a_j`.
    pub(crate) fn mu_lower_bound(&self, a: &[u64]) -> u128 {
        let prod = |vs: &[usize], f: &dyn Fn(u64) -> u128| {
            vs.iter().fold(1u128, |acc, &v| acc.saturating_mul(f(a[v])))
        };
        let id = |x: u64| x as u128;
        self.components.iter().fold(1u128, |acc, c| {
            let factor = match c {
                Component::Fermat(j) => a[*j] as u128,
                Component::Cycle(cyc) => prod(cyc, &id),
                Component::Rooted { c1, internal, leaves } => {
                    let p = prod(c1, &id);
                    let root = if c1.len() % 2 == 0 { p.saturating_sub(1) } else { p.saturating_add(1) };
                    root.saturating_mul(prod(internal, &id))
                        .saturating_mul(prod(leaves, &|x| x as u128 - 1))
                }
            };
            acc.saturating_mul(factor)
        })
    }
}

pub(crate) struct Sweep<'a> {
    pub mu_max: u64,
    pub nodes: &'a AtomicU64,
    pub budget: u64,
}

impl Sweep<'_> {
    /// Reduced, sorted systems with all weights below `d/2`, `μ ≤ mu_max` and
    /// an isolated singularity, generated by maps of type `t`.
    pub(crate) fn run(&self, t: &TypeClass) -> Result<Vec<WeightSystem>> {
        let layout = Layout::new(&t.representative);
        let mut a = vec![2u64; layout.kappa.len()];
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.descend(&layout, 0, &mut a, &mut seen, &mut out)?;
        out.sort();
        Ok(out)
    }

    fn descend(
        &self,
        layout: &Layout,
        pos: usize,
        a: &mut Vec<u64>,
        seen: &mut HashSet<WeightSystem>,
        out: &mut Vec<WeightSystem>,
    ) -> Result<()> {
        let v = layout.order[pos];
        for x in 2..=self.mu_max + 1 {
            if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            a[v] = x;
            if layout.mu_lower_bound(a) > self.mu_max as u128 {
                break;
            }
            if pos + 1 < layout.order.len() {
                self.descend(layout, pos + 1, a, seen, out)?;
            } else if let Some(ws) = self.accept(layout, a)? {
                if seen.insert(ws.clone()) && is_is3(&ws) {
                    out.push(ws);
                }
            }
        }
        a[v] = 2;
        Ok(())
    }

    fn accept(&self, layout: &Layout, a: &[u64]) -> Result<Option<WeightSystem>> {
        let g = KappaGraph::new(layout.kappa.clone(), a.to_vec())?;
        let ws = match solve_weights(&g)? {
            SolveOutcome::System(ws) => ws,
            // Impossible with all exponents at least 2.
            other => {
                return Err(Error::InvariantViolation(format!("{a:?} on {:?} gave {other:?}", layout.kappa)))
            }
        };
        if !ws.all_below_half() {
            return Ok(None);
        }
        match ws.milnor_integer() {
            Some(mu) if mu <= self.mu_max => Ok(Some(ws.canonical())),
            _ => Ok(None),
        }
    }
}
