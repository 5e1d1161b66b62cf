//! Weight systems `(v_1, …, v_n, d)` and the invariants computed from them:
//! Milnor number, Poincaré series, exponents and the characteristic polynomial
//! of the monodromy.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    euler_phi, gcd, lambda_to_divisor, poly_exact_div, DivisorElement, IntPolynomial,
    LambdaCombination, Rational,
};
use crate::error::{Error, Result};

/// Largest number of variables accepted anywhere; subset loops use `u32` bitmasks.
pub const MAX_VARS: usize = 16;

/// Integer weights `v_1, …, v_n` and weighted degree `d`, with `0 < v_i < d`.
///
/// Weights keep the order they were given in, so that subsets of indices in
/// condition witnesses refer to the caller's numbering. [`canonical`] gives
/// the ascending form used for equality of classified systems.
///
/// [`canonical`]: WeightSystem::canonical
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightSystem {
    weights: Vec<u64>,
    degree: u64,
}

impl WeightSystem {
    pub fn new(weights: Vec<u64>, degree: u64) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeightSystem("no variables".into()));
        }
        if weights.len() > MAX_VARS {
            return Err(Error::InvalidWeightSystem(format!(
                "{} variables exceeds the supported maximum of {MAX_VARS}",
                weights.len()
            )));
        }
        if let Some(&v) = weights.iter().find(|&&v| v == 0 || v >= degree) {
            return Err(Error::InvalidWeightSystem(format!(
                "weight {v} must satisfy 0 < v < d = {degree}"
            )));
        }
        Ok(Self { weights, degree })
    }

    /// Builds from `[v_1, …, v_n, d]`.
    pub fn from_slice(values: &[u64]) -> Result<Self> {
        match values.split_last() {
            Some((&d, v)) => Self::new(v.to_vec(), d),
            None => Err(Error::InvalidWeightSystem("empty input".into())),
        }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// `gcd(v_1, …, v_n, d)`.
    pub fn content(&self) -> u64 {
        self.weights.iter().fold(self.degree, |g, &v| gcd(g, v))
    }

    pub fn is_reduced(&self) -> bool {
        self.content() == 1
    }

    /// Divides all entries by their common gcd; idempotent.
    pub fn reduce(&self) -> Self {
        let g = self.content();
        Self { weights: self.weights.iter().map(|v| v / g).collect(), degree: self.degree / g }
    }

    /// Reduced and sorted ascending: the key under which classified systems are compared.
    pub fn canonical(&self) -> Self {
        let mut r = self.reduce();
        r.weights.sort_unstable();
        r
    }

    pub fn is_sorted(&self) -> bool {
        self.weights.windows(2).all(|w| w[0] <= w[1])
    }

    /// All `v_i < d/2`.
    pub fn all_below_half(&self) -> bool {
        self.weights.iter().all(|&v| 2 * v < self.degree)
    }

    /// Normalized weights `w_i = v_i/d`.
    pub fn normalized(&self) -> Vec<Rational> {
        self.weights
            .iter()
            .map(|&v| Rational::new(BigInt::from(v), BigInt::from(self.degree)))
            .collect()
    }

    /// `∏ (d - v_i)/v_i` as an exact rational.
    pub fn milnor_number(&self) -> Rational {
        self.weights.iter().fold(Rational::one(), |acc, &v| {
            acc * Rational::new(BigInt::from(self.degree - v), BigInt::from(v))
        })
    }

    /// The Milnor number when it is a (machine-sized) integer.
    pub fn milnor_integer(&self) -> Option<u64> {
        let mu = self.milnor_number();
        mu.is_integer().then(|| mu.to_integer().to_u64()).flatten()
    }

    /// `ρ(t) = ∏ (t^d - t^{v_i}) / (t^{v_i} - 1)`, or [`Error::NotPolynomial`]
    /// when the quotient leaves `ℤ[t]`.
    pub fn poincare_series(&self) -> Result<IntPolynomial> {
        let d = to_usize(self.degree)?;
        let mut num = IntPolynomial::one();
        for &v in &self.weights {
            let v = to_usize(v)?;
            let mut factor = vec![BigInt::zero(); d + 1];
            factor[d] = BigInt::one();
            factor[v] = -BigInt::one();
            num = &num * &IntPolynomial::new(factor);
        }
        for &v in &self.weights {
            num = poly_exact_div(&num, &IntPolynomial::t_pow_minus_one(to_usize(v)?))
                .map_err(|_| Error::NotPolynomial)?;
        }
        Ok(num)
    }

    /// Exponents `k/d`, each repeated by the coefficient of `t^k` in `ρ`.
    pub fn exponents(&self) -> Result<ExponentMultiset> {
        let rho = self.poincare_series()?;
        let mut entries = Vec::new();
        for (k, c) in rho.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                return Err(Error::NegativeCoefficient { exponent: k });
            }
            let mult = c.to_u64().ok_or_else(|| {
                Error::InvariantViolation(format!("exponent multiplicity {c} exceeds u64"))
            })?;
            entries.push((Rational::new(BigInt::from(k), BigInt::from(self.degree)), mult));
        }
        Ok(ExponentMultiset { entries })
    }

    /// Divisor of the characteristic polynomial of the monodromy from the
    /// product `∏ ((1/s_i)·Λ_{t_i} - 1)` with `w_i = s_i/t_i` in lowest terms.
    ///
    /// Factors are folded in ascending `t_i` order.
    pub fn charpoly_milnor_orlik(&self) -> Result<DivisorElement> {
        let mut factors: Vec<(u64, u64)> = self
            .weights
            .iter()
            .map(|&v| {
                let g = gcd(v, self.degree);
                (self.degree / g, v / g)
            })
            .collect();
        factors.sort_unstable();
        let one = LambdaCombination::one();
        let product = factors.iter().fold(one.clone(), |acc, &(t, s)| {
            let inv_s = Rational::new(BigInt::one(), BigInt::from(s));
            let factor = &LambdaCombination::term(inv_s, t) - &one;
            &acc * &factor
        });
        lambda_to_divisor(&product)
    }

    /// Order of the monodromy, which equals `d` for reduced systems with all
    /// weights below `d/2`.
    pub fn monodromy_order(&self) -> Result<u64> {
        if !self.is_reduced() {
            return Err(Error::PreconditionViolated(format!("{self} is not reduced")));
        }
        if !self.all_below_half() {
            return Err(Error::PreconditionViolated(format!("{self} has a weight >= d/2")));
        }
        Ok(self.degree)
    }
}

fn to_usize(x: u64) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::PreconditionViolated(format!("degree {x} too large")))
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for v in &self.weights {
            write!(f, "{v},")?;
        }
        write!(f, "{})", self.degree)
    }
}

/// Multiset of exponents `α_j ∈ (0, n)`, stored as distinct values with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentMultiset {
    entries: Vec<(Rational, u64)>,
}

impl ExponentMultiset {
    /// Total size counting multiplicity; equals the Milnor number.
    pub fn len(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct exponents ascending, with multiplicity.
    pub fn distinct(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    /// Every exponent, repeated according to multiplicity.
    pub fn expanded(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|(a, m)| std::iter::repeat_n(a.clone(), *m as usize))
            .collect()
    }

    /// Groups exponents by the order of `exp(2πiα)`, which is the reduced
    /// denominator of `α`. Each group of order `m` must have a size divisible
    /// by `φ(m)`; the quotient is the multiplicity of `Φ_m`.
    pub fn to_divisor(&self) -> Result<DivisorElement> {
        let mut counts = std::collections::BTreeMap::<u64, u64>::new();
        for (a, mult) in &self.entries {
            let m = a.denom().to_u64().ok_or(Error::NotIntegral { m: 0 })?;
            *counts.entry(m).or_insert(0) += mult;
        }
        let mut out = DivisorElement::new();
        for (m, c) in counts {
            let phi = euler_phi(m);
            if c % phi != 0 {
                return Err(Error::NotIntegral { m });
            }
            out.add(m, (c / phi) as i64);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn ws(v: &[u64]) -> WeightSystem {
        WeightSystem::from_slice(v).unwrap()
    }

    #[test]
    fn construction_rejects_bad_weights() {
        assert!(WeightSystem::new(vec![], 3).is_err());
        assert!(WeightSystem::new(vec![0, 1], 3).is_err());
        assert!(WeightSystem::new(vec![3, 1], 3).is_err());
        assert!(WeightSystem::new(vec![1; 17], 3).is_err());
    }

    #[test]
    fn reduction() {
        assert_eq!(ws(&[2, 2, 2, 6]).reduce(), ws(&[1, 1, 1, 3]));
        assert_eq!(ws(&[1, 33, 58, 24, 265]).reduce(), ws(&[1, 33, 58, 24, 265]));
        assert_eq!(ws(&[2, 3, 8]).reduce(), ws(&[2, 3, 8]));
        let w = ws(&[4, 6, 16]);
        assert_eq!(w.reduce().reduce(), w.reduce());
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(ws(&[1, 1, 1, 3]).milnor_number(), rational(8, 1));
        assert_eq!(ws(&[2, 3, 8]).milnor_number(), rational(5, 1));
        assert_eq!(ws(&[1, 33, 58, 24, 265]).milnor_number(), rational(66516, 1));
        assert_eq!(ws(&[30, 348, 580, 855, 1740]).milnor_integer(), Some(472));
    }

    #[test]
    fn poincare_series_examples() {
        assert_eq!(ws(&[1, 1, 3]).poincare_series().unwrap(), IntPolynomial::from_i64(&[0, 0, 1, 2, 1]));
        for d in 2..12u64 {
            let expected: Vec<i64> = (0..d).map(|k| i64::from(k > 0)).collect();
            assert_eq!(ws(&[1, d]).poincare_series().unwrap(), IntPolynomial::from_i64(&expected));
        }
        let ivlev = ws(&[1, 33, 58, 24, 265]).poincare_series().unwrap();
        assert!(ivlev.has_nonnegative_coeffs());
        assert_eq!(ivlev.eval_at_one(), BigInt::from(66516));
    }

    #[test]
    fn non_polynomial_series() {
        // gcd(2,4) = 2 divides neither 5 - 2 nor 5 - 4.
        assert_eq!(ws(&[2, 4, 5]).poincare_series(), Err(Error::NotPolynomial));
    }

    #[test]
    fn exponent_examples() {
        let e = ws(&[1, 1, 3]).exponents().unwrap();
        assert_eq!(e.expanded(), vec![rational(2, 3), rational(1, 1), rational(1, 1), rational(4, 3)]);
        let e = ws(&[2, 3, 8]).exponents().unwrap();
        assert_eq!(
            e.expanded(),
            vec![rational(5, 8), rational(7, 8), rational(1, 1), rational(9, 8), rational(11, 8)]
        );
        assert_eq!(ws(&[1, 3]).exponents().unwrap().expanded(), vec![rational(1, 3), rational(2, 3)]);
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(
            ws(&[2, 3, 8]).charpoly_milnor_orlik().unwrap(),
            DivisorElement::from_pairs([(8, 1), (1, 1)])
        );
        assert_eq!(ws(&[1, 3]).charpoly_milnor_orlik().unwrap(), DivisorElement::from_pairs([(3, 1)]));
        // (Λ3 - 1)^2 = 3Λ3 - 2Λ3 + 1 = Λ3 + Λ1, so Φ3·Φ1^2.
        let d = ws(&[1, 1, 3]).charpoly_milnor_orlik().unwrap();
        assert_eq!(d, DivisorElement::from_pairs([(3, 1), (1, 2)]));
        assert_eq!(d, ws(&[1, 1, 3]).exponents().unwrap().to_divisor().unwrap());
    }

    #[test]
    fn monodromy_orders() {
        assert_eq!(ws(&[2, 3, 8]).monodromy_order(), Ok(8));
        assert_eq!(ws(&[1, 1, 3]).monodromy_order(), Ok(3));
        assert_eq!(ws(&[30, 348, 580, 855, 1740]).monodromy_order(), Ok(1740));
        assert!(matches!(ws(&[1, 2]).monodromy_order(), Err(Error::PreconditionViolated(_))));
        assert!(matches!(ws(&[2, 4, 6]).monodromy_order(), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn canonical_form_sorts() {
        assert_eq!(ws(&[3, 2, 8]).canonical(), ws(&[2, 3, 8]));
        assert_eq!(ws(&[6, 4, 16]).canonical(), ws(&[2, 3, 8]));
        assert_eq!(ws(&[2, 3, 8]).to_string(), "(2,3,8)");
    }
}
