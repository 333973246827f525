//! Integer polynomials and rational generating functions.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense polynomial with arbitrary-precision coefficients, lowest degree first.
/// Trailing zeros are always stripped, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coefficients: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coefficients };
        p.normalize();
        p
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coefficient: BigInt, degree: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); degree + 1];
        coefficients[degree] = coefficient;
        Self::new(coefficients)
    }

    fn normalize(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    /// `None` for the zero polynomial (degree −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coefficients.get(i).cloned().unwrap_or_default()
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        IntPolynomial::new(
            (0..n)
                .map(|i| self.coefficient(i) + rhs.coefficient(i))
                .collect(),
        )
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coefficients.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

/// `numerator / denominator` as a formal power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalGF {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.coefficient(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalGF {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    /// Coefficients of `x^0..=x^n`, produced by the linear recurrence the
    /// denominator induces: `d0·a(m) = num(m) − Σ_{j≥1} d_j·a(m−j)`.
    pub fn expand(&self, n: usize) -> Result<Vec<BigInt>> {
        let den = self.denominator.coefficients();
        let d0 = &den[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut acc = self.numerator.coefficient(m);
            for (j, dj) in den.iter().enumerate().skip(1).take(m) {
                acc -= dj * &out[m - j];
            }
            let (q, r) = acc.div_rem(d0);
            if !r.is_zero() {
                return Err(Error::NonIntegralSeries(m));
            }
            out.push(q);
        }
        Ok(out)
    }
}
