//! Maps `κ` selecting one monomial `x_j^{a_j}·x_{κ(j)}` per variable, the
//! weight systems they force, and the maps compatible with a given system.

mod types;

pub use types::{
    canonical_code, chain_map, enumerate_types, is_chain_map, type_of, TypeClass, MAX_TYPE_VARS,
};
pub(crate) use types::cycles;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::weights::WeightSystem;

/// A map `κ` (0-based) together with the exponents `a_j` of the monomials
/// `x_j^{a_j}·x_{κ(j)}`. A fixed point `κ(j) = j` stands for `x_j^{a_j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KappaGraph {
    kappa: Vec<usize>,
    exps: Vec<u64>,
}

impl KappaGraph {
    pub fn new(kappa: Vec<usize>, exps: Vec<u64>) -> Result<Self> {
        let n = kappa.len();
        if n == 0 || exps.len() != n {
            return Err(Error::InvalidGraph(format!(
                "map of length {n} with {} exponents",
                exps.len()
            )));
        }
        if kappa.iter().any(|&k| k >= n) {
            return Err(Error::InvalidGraph(format!("map {kappa:?} leaves 0..{n}")));
        }
        if exps.contains(&0) {
            return Err(Error::InvalidGraph("exponents must be positive".into()));
        }
        Ok(Self { kappa, exps })
    }

    /// The chain `x_1^{a_1+1} + x_2^{a_2}x_1 + … + x_n^{a_n}x_{n-1}`.
    pub fn chain(exps: Vec<u64>) -> Result<Self> {
        Self::new(chain_map(exps.len()), exps)
    }

    pub fn n(&self) -> usize {
        self.kappa.len()
    }

    pub fn kappa(&self) -> &[usize] {
        &self.kappa
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn type_class(&self) -> Result<&'static TypeClass> {
        type_of(&self.kappa)
    }

    /// Exponent vectors of the monomials `x_j^{a_j}·x_{κ(j)}`.
    pub fn support(&self) -> Vec<Vec<u64>> {
        (0..self.n())
            .map(|j| {
                let mut alpha = vec![0u64; self.n()];
                alpha[j] += self.exps[j];
                alpha[self.kappa[j]] += 1;
                alpha
            })
            .collect()
    }
}

/// `ρ(x_1, …, x_k) = x_1⋯x_k - x_2⋯x_k + … + (-1)^{k-1}x_k + (-1)^k`.
pub fn rho_chain<T: Clone + Into<BigInt>>(xs: &[T]) -> BigInt {
    xs.iter().enumerate().fold(BigInt::one(), |acc, (i, x)| {
        let sign = if (i + 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        acc * x.clone().into() + sign
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleValidity {
    /// Weights exist and are unique up to rescaling.
    Unique,
    /// Weights exist but some even cycle has all exponents 1, leaving a free parameter.
    Family,
    /// Some even cycle forces a nonpositive weight.
    Invalid,
}

/// Checks the exponent conditions on even cycles: either neither alternating
/// half of the cycle is all ones, or the whole cycle is.
pub fn validate_even_cycles(g: &KappaGraph) -> CycleValidity {
    let mut family = false;
    for cyc in cycles(&g.kappa) {
        if cyc.len() % 2 == 1 {
            continue;
        }
        let a: Vec<u64> = cyc.iter().map(|&j| g.exps[j]).collect();
        let odd_ones = a.iter().step_by(2).all(|&x| x == 1);
        let even_ones = a.iter().skip(1).step_by(2).all(|&x| x == 1);
        if odd_ones && even_ones {
            family = true;
        } else if odd_ones || even_ones {
            return CycleValidity::Invalid;
        }
    }
    if family {
        CycleValidity::Family
    } else {
        CycleValidity::Unique
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Reduced weight system, weights in vertex order.
    System(WeightSystem),
    Family,
    Invalid,
}

/// Normalized weights solving `a_j·w_j + w_{κ(j)} = 1`, when unique.
pub fn solve_normalized(g: &KappaGraph) -> Option<Vec<Rational>> {
    if validate_even_cycles(g) != CycleValidity::Unique {
        return None;
    }
    let n = g.n();
    let mut w: Vec<Option<Rational>> = vec![None; n];
    for cyc in cycles(&g.kappa) {
        let l = cyc.len();
        if l == 1 {
            let j = cyc[0];
            w[j] = Some(Rational::new(BigInt::one(), BigInt::from(g.exps[j] + 1)));
            continue;
        }
        let prod: BigInt = cyc.iter().map(|&j| BigInt::from(g.exps[j])).product();
        let denom: BigInt = if l % 2 == 0 { prod - 1 } else { prod + 1 };
        for i in 0..l {
            // a_{j_{i+1}}, …, a_{j_l}, a_{j_1}, …, a_{j_{i-1}}
            let seq: Vec<u64> = (1..l).map(|s| g.exps[cyc[(i + s) % l]]).collect();
            w[cyc[i]] = Some(Rational::new(rho_chain(&seq), denom.clone()));
        }
    }
    // Tree vertices, working outward from the cycles.
    let mut pending: Vec<usize> = (0..n).filter(|&j| w[j].is_none()).collect();
    while !pending.is_empty() {
        pending.retain(|&j| match w[g.kappa[j]].clone() {
            Some(target) => {
                let a = Rational::from_integer(BigInt::from(g.exps[j]));
                w[j] = Some((Rational::one() - target) / a);
                false
            }
            None => true,
        });
    }
    Some(w.into_iter().map(|x| x.expect("all vertices solved")).collect())
}

/// Integer weight system determined by `(κ, a)`.
pub fn solve_weights(g: &KappaGraph) -> Result<SolveOutcome> {
    match validate_even_cycles(g) {
        CycleValidity::Invalid => return Ok(SolveOutcome::Invalid),
        CycleValidity::Family => return Ok(SolveOutcome::Family),
        CycleValidity::Unique => {}
    }
    let w = solve_normalized(g).expect("unique solution");
    weights_from_normalized(&w).map(SolveOutcome::System)
}

/// Clears denominators of `w_i ∈ (0,1)`: `d = lcm(denominators)`, `v_i = w_i·d`.
pub(crate) fn weights_from_normalized(w: &[Rational]) -> Result<WeightSystem> {
    if let Some(bad) = w.iter().find(|x| !x.is_positive() || **x >= Rational::one()) {
        return Err(Error::InvariantViolation(format!("solved weight {bad} outside (0,1)")));
    }
    let d = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let to_u64 = |x: &BigInt| {
        x.to_u64()
            .ok_or_else(|| Error::PreconditionViolated(format!("weighted degree {d} exceeds u64")))
    };
    let v = w
        .iter()
        .map(|x| to_u64(&(x.numer() * (&d / x.denom()))))
        .collect::<Result<Vec<u64>>>()?;
    Ok(WeightSystem::new(v, to_u64(&d)?)?.reduce())
}

pub(crate) fn is_fcc_map(kappa: &[usize]) -> bool {
    let mut indeg = vec![0usize; kappa.len()];
    for (j, &k) in kappa.iter().enumerate() {
        if j != k {
            indeg[k] += 1;
        }
    }
    indeg.iter().all(|&d| d <= 1)
}

/// True iff the type is a disjoint sum of Fermat points, chains and cycles,
/// i.e. no vertex receives two arrows.
pub fn is_fcc(g: &KappaGraph) -> bool {
    is_fcc_map(&g.kappa)
}

/// Every map `κ` compatible with the full support of `ws`: for each `j`, some
/// `a_j ≥ 1` with `a_j·v_j + v_{κ(j)} = d` (for `κ(j) = j`: `(a_j+1)·v_j = d`).
/// Each admissible pair `(j, κ(j))` determines its `a_j`.
pub fn kappa_choices(ws: &WeightSystem) -> Vec<KappaGraph> {
    let n = ws.n();
    let d = ws.degree();
    let options: Vec<Vec<(usize, u64)>> = (0..n)
        .map(|j| {
            let vj = ws.weight(j);
            (0..n)
                .filter_map(|k| {
                    let rest = d - ws.weight(k);
                    if k == j {
                        (d.is_multiple_of(vj) && d / vj >= 2).then(|| (k, d / vj - 1))
                    } else {
                        rest.is_multiple_of(vj).then(|| (k, rest / vj))
                    }
                })
                .collect()
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut pick = vec![0usize; n];
    loop {
        let kappa = (0..n).map(|j| options[j][pick[j]].0).collect();
        let exps = (0..n).map(|j| options[j][pick[j]].1).collect();
        out.push(KappaGraph { kappa, exps });
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            pick[pos] += 1;
            if pick[pos] < options[pos].len() {
                break;
            }
            pick[pos] = 0;
        }
    }
}
