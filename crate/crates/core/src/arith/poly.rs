use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::divisors;
use crate::error::{Error, Result};

/// Dense polynomial in one variable `t` with arbitrary-precision integer
/// coefficients. `coeffs[k]` is the coefficient of `t^k`; trailing zeros are
/// never stored, so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c·t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `t^k - 1`.
    pub fn t_pow_minus_one(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] += 1;
        coeffs[0] -= 1;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// Value at `t = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{k}")?,
                _ => write!(f, "{mag}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        // Iterate over the sparser operand's nonzero terms.
        let (sparse, dense) = if self.terms().count() <= rhs.terms().count() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (i, a) in sparse.terms() {
            for (j, b) in dense.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPolynomial::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Exact quotient `num / den` over the integers.
///
/// Fails with [`Error::NotDivisible`] when `den` does not divide `num` in
/// `ℤ[t]`, including the case where some step of the long division needs a
/// non-integral quotient coefficient. The inner loop only walks the nonzero
/// terms of `den`, so dividing by binomials such as `t^v - 1` is linear in the
/// degree of `num`.
pub fn poly_exact_div(num: &IntPolynomial, den: &IntPolynomial) -> Result<IntPolynomial> {
    let den_deg = den.degree().ok_or(Error::DivisionByZero)?;
    let Some(num_deg) = num.degree() else {
        return Ok(IntPolynomial::zero());
    };
    if num_deg < den_deg {
        return Err(Error::NotDivisible);
    }
    let lead = den.leading_coeff().expect("nonzero divisor");
    let den_terms: Vec<(usize, BigInt)> = den
        .terms()
        .filter(|&(j, _)| j < den_deg)
        .map(|(j, c)| (j, c.clone()))
        .collect();
    let mut rem = num.coeffs.clone();
    let mut quot = vec![BigInt::zero(); num_deg - den_deg + 1];
    for i in (den_deg..=num_deg).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let (f, r) = rem[i].div_rem(lead);
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        let shift = i - den_deg;
        for (j, c) in &den_terms {
            rem[shift + j] -= &f * c;
        }
        rem[i] = BigInt::zero();
        quot[shift] = f;
    }
    if rem[..den_deg].iter().any(|c| !c.is_zero()) {
        return Err(Error::NotDivisible);
    }
    Ok(IntPolynomial::new(quot))
}

/// The cyclotomic polynomial `Φ_m`, obtained by dividing `t^m - 1` by the
/// cyclotomic polynomials of all proper divisors of `m`.
pub fn cyclotomic_poly(m: u64) -> IntPolynomial {
    assert!(m >= 1, "cyclotomic polynomial index must be positive");
    let mut table: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for e in divisors(m) {
        let mut p = IntPolynomial::t_pow_minus_one(e as usize);
        for (&f, phi) in &table {
            if e % f == 0 {
                p = poly_exact_div(&p, phi).expect("cyclotomic factor divides t^e - 1");
            }
        }
        table.insert(e, p);
    }
    table.remove(&m).expect("m divides itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::euler_phi;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn difference_of_squares() {
        let q = poly_exact_div(&p(&[-1, 0, 0, 0, 1]), &p(&[-1, 0, 1])).unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
    }

    #[test]
    fn cubic_by_linear() {
        // (t^3 - t) / (t - 1) = t^2 + t
        let q = poly_exact_div(&p(&[0, -1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[0, 1, 1]));
    }

    #[test]
    fn remainder_detected() {
        // (t^3 - 1) / (t^2 - 1) leaves remainder t - 1
        assert_eq!(poly_exact_div(&p(&[-1, 0, 0, 1]), &p(&[-1, 0, 1])), Err(Error::NotDivisible));
        // non-integral leading quotient
        assert_eq!(poly_exact_div(&p(&[0, 1]), &p(&[0, 2])), Err(Error::NotDivisible));
        assert_eq!(poly_exact_div(&p(&[1]), &IntPolynomial::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1), p(&[-1, 1]));
        assert_eq!(cyclotomic_poly(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(8), p(&[1, 0, 0, 0, 1]));
        // Φ_105 is the first with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_poly(105).coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn cyclotomic_products_give_binomials() {
        for k in 1..=64u64 {
            let prod = divisors(k)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, m| &acc * &cyclotomic_poly(m));
            assert_eq!(prod, IntPolynomial::t_pow_minus_one(k as usize), "k = {k}");
            assert_eq!(cyclotomic_poly(k).degree(), Some(euler_phi(k) as usize));
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, 1, 2, 1]).to_string(), "t^4 + 2t^3 + t^2");
        assert_eq!(p(&[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(&[-3]).to_string(), "-3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
