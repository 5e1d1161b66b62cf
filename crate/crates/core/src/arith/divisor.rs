use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{checked_lcm, cyclotomic_poly, divisors, euler_phi, gcd, IntPolynomial, Rational};
use crate::error::{Error, Result};

/// Rational linear combination of the generators `Λ_k = div(t^k - 1)`.
///
/// Multiplication follows `Λ_a·Λ_b = gcd(a,b)·Λ_lcm(a,b)`, with `Λ_1` the
/// unit. Coefficients may be fractional; integrality only matters once the
/// combination is turned into a [`DivisorElement`].
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LambdaCombination {
    terms: BTreeMap<u64, Rational>,
}

impl LambdaCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::generator(1)
    }

    /// The generator `Λ_k`.
    pub fn generator(k: u64) -> Self {
        Self::term(Rational::one(), k)
    }

    /// `c·Λ_k`.
    pub fn term(c: Rational, k: u64) -> Self {
        assert!(k >= 1, "Λ index must be positive");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn coeff(&self, k: u64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Rational)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: u64, c: Rational) {
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }
}

/// Product in the Λ algebra.
///
/// # Panics
/// If the least common multiple of two indices does not fit in `u64`.
pub fn lambda_mul(x: &LambdaCombination, y: &LambdaCombination) -> LambdaCombination {
    let mut out = LambdaCombination::zero();
    for (&a, ca) in &x.terms {
        for (&b, cb) in &y.terms {
            let l = checked_lcm(a, b).expect("Λ index overflows u64");
            let g = Rational::from_integer(BigInt::from(gcd(a, b)));
            out.add_term(l, ca * cb * g);
        }
    }
    out
}

impl Add for &LambdaCombination {
    type Output = LambdaCombination;
    fn add(self, rhs: &LambdaCombination) -> LambdaCombination {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &LambdaCombination {
    type Output = LambdaCombination;
    fn sub(self, rhs: &LambdaCombination) -> LambdaCombination {
        self + &(-rhs)
    }
}

impl Neg for &LambdaCombination {
    type Output = LambdaCombination;
    fn neg(self) -> LambdaCombination {
        LambdaCombination { terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect() }
    }
}

impl Mul for &LambdaCombination {
    type Output = LambdaCombination;
    fn mul(self, rhs: &LambdaCombination) -> LambdaCombination {
        lambda_mul(self, rhs)
    }
}

impl fmt::Display for LambdaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "L{k}")?;
            } else {
                write!(f, "({mag})L{k}")?;
            }
        }
        Ok(())
    }
}

/// Integer multiplicities of the primitive `m`-th roots of unity, i.e. the
/// exponent of `Φ_m` in a product of cyclotomic polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct DivisorElement {
    mults: BTreeMap<u64, i64>,
}

impl DivisorElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, i64)>) -> Self {
        let mut d = Self::new();
        for (m, k) in pairs {
            d.add(m, k);
        }
        d
    }

    pub fn add(&mut self, m: u64, mult: i64) {
        assert!(m >= 1, "cyclotomic index must be positive");
        let entry = self.mults.entry(m).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            self.mults.remove(&m);
        }
    }

    pub fn mult(&self, m: u64) -> i64 {
        self.mults.get(&m).copied().unwrap_or(0)
    }

    /// `(m, multiplicity)` pairs ascending in `m`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u64, i64)> + '_ {
        self.mults.iter().map(|(&m, &k)| (m, k))
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `Σ mult(m)·φ(m)`, the degree of the associated polynomial.
    pub fn degree(&self) -> i64 {
        self.iter().map(|(m, k)| k * euler_phi(m) as i64).sum()
    }

    /// Expands `∏ Φ_m^mult(m)`.
    pub fn to_poly(&self) -> Result<IntPolynomial> {
        if let Some((m, mult)) = self.iter().find(|&(_, k)| k < 0) {
            return Err(Error::NegativeMultiplicity { m, mult });
        }
        Ok(self
            .iter()
            .fold(IntPolynomial::one(), |acc, (m, k)| &acc * &cyclotomic_poly(m).pow(k as u32)))
    }
}

impl fmt::Display for DivisorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mults.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .iter()
            .rev()
            .map(|(m, k)| if k == 1 { format!("Phi{m}") } else { format!("Phi{m}^{k}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Converts a Λ combination to root multiplicities: `mult(m)` is the sum of
/// the coefficients of all `Λ_k` with `m | k`.
pub fn lambda_to_divisor(x: &LambdaCombination) -> Result<DivisorElement> {
    let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
    for (k, c) in x.terms() {
        for m in divisors(k) {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
    }
    let mut out = DivisorElement::new();
    for (m, c) in acc {
        if !c.is_integer() {
            return Err(Error::NotIntegral { m });
        }
        let k = c.to_integer().to_i64().ok_or(Error::NotIntegral { m })?;
        out.add(m, k);
    }
    Ok(out)
}

/// Renders `∏ Φ_m^mult(m)`; see [`DivisorElement::to_poly`].
pub fn divisor_to_poly(x: &DivisorElement) -> Result<IntPolynomial> {
    x.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn l(k: u64) -> LambdaCombination {
        LambdaCombination::generator(k)
    }

    #[test]
    fn generator_rule() {
        assert_eq!(lambda_mul(&l(4), &l(8)), LambdaCombination::term(rational(4, 1), 8));
        assert_eq!(lambda_mul(&l(1), &l(7)), l(7));
    }

    #[test]
    fn coprime_expansion() {
        let one = LambdaCombination::one();
        let lhs = &(&l(2) - &one) * &(&l(3) - &one);
        let rhs = &(&(&l(6) - &l(2)) - &l(3)) + &one;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn divisor_conversion() {
        let x = &(&l(8) - &l(4)) + &l(1);
        assert_eq!(lambda_to_divisor(&x).unwrap(), DivisorElement::from_pairs([(8, 1), (1, 1)]));
        assert_eq!(lambda_to_divisor(&l(1)).unwrap(), DivisorElement::from_pairs([(1, 1)]));
        assert_eq!(
            lambda_to_divisor(&l(6)).unwrap(),
            DivisorElement::from_pairs([(1, 1), (2, 1), (3, 1), (6, 1)])
        );
    }

    #[test]
    fn non_integral_rejected() {
        let x = LambdaCombination::term(rational(1, 2), 3);
        assert_eq!(lambda_to_divisor(&x), Err(Error::NotIntegral { m: 1 }));
    }

    #[test]
    fn divisor_polynomials() {
        let d = DivisorElement::from_pairs([(8, 1), (1, 1)]);
        let expected = &IntPolynomial::from_i64(&[1, 0, 0, 0, 1]) * &IntPolynomial::from_i64(&[-1, 1]);
        assert_eq!(d.to_poly().unwrap(), expected);
        assert_eq!(DivisorElement::new().to_poly().unwrap(), IntPolynomial::one());
        assert_eq!(
            DivisorElement::from_pairs([(1, 2)]).to_poly().unwrap(),
            IntPolynomial::from_i64(&[1, -2, 1])
        );
        assert_eq!(
            DivisorElement::from_pairs([(3, -1)]).to_poly(),
            Err(Error::NegativeMultiplicity { m: 3, mult: -1 })
        );
    }

    #[test]
    fn degree_of_generator() {
        for k in 1..=100 {
            assert_eq!(lambda_to_divisor(&l(k)).unwrap().degree(), k as i64);
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(DivisorElement::from_pairs([(8, 1), (1, 1)]).to_string(), "Phi8*Phi1");
        assert_eq!(DivisorElement::from_pairs([(3, 1), (1, 2)]).to_string(), "Phi3*Phi1^2");
    }
}
