//! Chain type `x_1^{a_1+1} + x_2^{a_2}x_1 + … + x_n^{a_n}x_{n-1}`: closed
//! forms, and the audit of systems with prime Milnor number.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::arith::{divisors, is_prime, DivisorElement, Rational};
use crate::error::{Error, Result};
use crate::graphs::{is_chain_map, kappa_choices, rho_chain, KappaGraph};
use crate::weights::WeightSystem;

use super::{enumerate, EnumerateOptions};

/// A chain weight system in both orders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSystem {
    /// Reduced, weights ascending.
    pub system: WeightSystem,
    /// Reduced, weights in chain order `x_1, …, x_n`.
    pub chain_order: WeightSystem,
    pub mu: u64,
}

/// `t_i = a_i⋯a_2·(a_1+1)` for `i = 1..n`.
pub fn chain_denominators(a: &[u64]) -> Result<Vec<u64>> {
    let mut t = Vec::with_capacity(a.len());
    let mut acc = 1u64;
    for (i, &x) in a.iter().enumerate() {
        let f = if i == 0 { x + 1 } else { x };
        acc = acc
            .checked_mul(f)
            .ok_or_else(|| Error::PreconditionViolated(format!("chain {a:?} overflows u64")))?;
        t.push(acc);
    }
    Ok(t)
}

fn check_chain(a: &[u64]) -> Result<()> {
    if a.is_empty() || a.iter().any(|&x| x < 2) {
        return Err(Error::PreconditionViolated(format!("chain exponents {a:?} must be >= 2")));
    }
    Ok(())
}

/// `(a_{i-1}, …, a_2, a_1+1)`, the arguments of `s_i`; `i` is 1-based.
fn reversed_prefix(a: &[u64], i: usize) -> Vec<u64> {
    let mut xs: Vec<u64> = a[..i - 1].to_vec();
    if let Some(first) = xs.first_mut() {
        *first += 1;
    }
    xs.reverse();
    xs
}

/// Weights `w_i = s_i/t_i` with `s_i = ρ(a_{i-1}, …, a_2, a_1+1)`, and `d = t_n`.
pub fn chain_weight_system(a: &[u64]) -> Result<ChainSystem> {
    check_chain(a)?;
    let t = chain_denominators(a)?;
    let d = *t.last().expect("nonempty");
    let v = (1..=a.len())
        .map(|i| {
            let s = rho_chain(&reversed_prefix(a, i));
            (s * BigInt::from(d / t[i - 1]))
                .to_u64()
                .ok_or_else(|| Error::InvariantViolation(format!("chain {a:?} has a negative weight")))
        })
        .collect::<Result<Vec<u64>>>()?;
    let chain_order = WeightSystem::new(v, d)?.reduce();
    let mu = rho_chain(&reversed_prefix(a, a.len() + 1))
        .to_u64()
        .ok_or_else(|| Error::InvariantViolation(format!("chain {a:?} has nonpositive mu")))?;
    Ok(ChainSystem { system: chain_order.canonical(), chain_order, mu })
}

/// Divisor `{m : 1}` over all `m | t_n` whose least `i ∈ {0..n}` with `m | t_i`
/// has the parity of `n`, where `t_0 = 1`.
///
/// This equals the characteristic polynomial of the monodromy only when every
/// `s_i/t_i` is already in lowest terms, which holds whenever `μ` is prime.
/// For `a = (2, 2)`, `w_2 = 2/6` and the formula gives `Φ_6Φ_2Φ_1` while the
/// system `(1,1,3)` has `Φ_3Φ_1²`.
pub fn chain_charpoly(a: &[u64]) -> Result<DivisorElement> {
    check_chain(a)?;
    let mut t = vec![1u64];
    t.extend(chain_denominators(a)?);
    let n = a.len();
    let mut out = DivisorElement::new();
    for m in divisors(t[n]) {
        let first = (0..=n).find(|&i| t[i] % m == 0).expect("m divides t_n");
        if first % 2 == n % 2 {
            out.add(m, 1);
        }
    }
    Ok(out)
}

/// Chain exponents `(a_1, …, a_n)` of a chain-shaped map, root first.
pub fn chain_exponents(g: &KappaGraph) -> Option<Vec<u64>> {
    if !is_chain_map(g.kappa()) {
        return None;
    }
    let kappa = g.kappa();
    let mut v = (0..g.n()).find(|&j| kappa[j] == j)?;
    let mut out = vec![g.exps()[v]];
    while let Some(next) = (0..g.n()).find(|&j| j != v && kappa[j] == v) {
        out.push(g.exps()[next]);
        v = next;
    }
    Some(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeMuEntry {
    pub mu: u64,
    pub system: WeightSystem,
    /// Chain exponents of the unique compatible map, when it is a chain.
    pub chain: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeMuAudit {
    pub n: usize,
    pub mu_max: u64,
    pub entries: Vec<PrimeMuEntry>,
    pub violations: Vec<String>,
}

impl PrimeMuAudit {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Chain tuples of all systems with Milnor number `mu`, sorted.
    pub fn chains_for(&self, mu: u64) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = self
            .entries
            .iter()
            .filter(|e| e.mu == mu)
            .filter_map(|e| e.chain.clone())
            .collect();
        out.sort();
        out
    }
}

/// For every enumerated system with prime `μ`: the compatible map must be
/// unique and of chain type, all eigenvalues simple, and the chain closed
/// forms must reproduce the weights and the characteristic polynomial.
pub fn classify_prime_mu(n: usize, mu_max: u64, opts: &EnumerateOptions) -> Result<PrimeMuAudit> {
    let records = enumerate(n, mu_max, opts)?;
    let mut audit = PrimeMuAudit { n, mu_max, ..Default::default() };
    for r in records.iter().filter(|r| is_prime(r.mu)) {
        let ws = &r.system;
        let choices = kappa_choices(ws);
        let chain = match choices.as_slice() {
            [g] => chain_exponents(g),
            _ => None,
        };
        match &chain {
            None => audit.violations.push(format!(
                "{ws}: {} compatible maps, expected one chain",
                choices.len()
            )),
            Some(a) => {
                let closed = chain_weight_system(a)?;
                if &closed.system != ws || closed.mu != r.mu {
                    audit.violations.push(format!("{ws}: chain {a:?} gives {}", closed.system));
                }
                if chain_charpoly(a)? != r.charpoly {
                    audit.violations.push(format!("{ws}: chain characteristic polynomial differs"));
                }
            }
        }
        if r.charpoly.iter().any(|(_, mult)| mult != 1) {
            audit.violations.push(format!("{ws}: repeated eigenvalue in {}", r.charpoly));
        }
        audit.entries.push(PrimeMuEntry { mu: r.mu, system: ws.clone(), chain });
    }
    Ok(audit)
}

/// `w_i = s_i/t_i` as exact rationals, unreduced data kept for inspection.
pub fn chain_fractions(a: &[u64]) -> Result<Vec<Rational>> {
    check_chain(a)?;
    let t = chain_denominators(a)?;
    Ok((1..=a.len())
        .map(|i| Rational::new(rho_chain(&reversed_prefix(a, i)), BigInt::from(t[i - 1])))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{solve_weights, SolveOutcome};

    #[test]
    fn closed_form_examples() {
        let c = chain_weight_system(&[3, 2]).unwrap();
        assert_eq!(c.system, WeightSystem::from_slice(&[2, 3, 8]).unwrap());
        assert_eq!(c.mu, 5);
        assert_eq!(chain_weight_system(&[3, 2, 2]).unwrap().mu, 11);
        assert_eq!(chain_weight_system(&[5, 2, 2, 2]).unwrap().mu, 31);
        assert!(chain_weight_system(&[1, 2]).is_err());
    }

    #[test]
    fn closed_form_agrees_with_solver() {
        for a1 in 2..6 {
            for a2 in 2..6 {
                for a3 in 2..5 {
                    let a = vec![a1, a2, a3];
                    let c = chain_weight_system(&a).unwrap();
                    let g = KappaGraph::chain(a.clone()).unwrap();
                    assert_eq!(solve_weights(&g).unwrap(), SolveOutcome::System(c.chain_order.clone()));
                    assert_eq!(Rational::from_integer(c.mu.into()), c.system.milnor_number());
                }
            }
        }
    }

    #[test]
    fn charpoly_examples() {
        let d = chain_charpoly(&[3, 2]).unwrap();
        assert_eq!(d, DivisorElement::from_pairs([(8, 1), (1, 1)]));
        assert_eq!(d.degree(), 5);
        assert_eq!(chain_charpoly(&[3, 2, 2]).unwrap().degree(), 11);
        // A_4: divisors of 5 other than 1.
        assert_eq!(chain_charpoly(&[4]).unwrap(), DivisorElement::from_pairs([(5, 1)]));
    }

    #[test]
    fn charpoly_needs_reduced_fractions() {
        // w_2 = 2/6 is not reduced; the closed form misses the true polynomial.
        let a = [2, 2];
        let ws = chain_weight_system(&a).unwrap();
        assert_ne!(chain_charpoly(&a).unwrap(), ws.system.charpoly_milnor_orlik().unwrap());
    }

    #[test]
    fn exponents_read_back() {
        let g = KappaGraph::new(vec![1, 1, 0], vec![2, 5, 3]).unwrap();
        assert_eq!(chain_exponents(&g), Some(vec![5, 2, 3]));
        let not_chain = KappaGraph::new(vec![0, 0, 0], vec![2, 2, 2]).unwrap();
        assert_eq!(chain_exponents(&not_chain), None);
    }
}
