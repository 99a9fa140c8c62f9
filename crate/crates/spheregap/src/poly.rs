//! Dense univariate polynomials with exact coefficient arithmetic.
//!
//! Coefficients are stored in ascending degree order and the representation is
//! kept normalized: the highest stored coefficient is nonzero, and the zero
//! polynomial is the empty coefficient sequence.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Coeff;
use crate::Error;

/// Dense univariate polynomial over an exact scalar `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DensePolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> DensePolynomial<T> {
    /// Builds a polynomial from ascending coefficients, trimming leading zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// The zero polynomial (empty coefficient sequence).
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// A constant polynomial.
    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        let mut k = T::one();
        for c in &self.coeffs[1..] {
            out.push(c.clone() * k.clone());
            k = k + T::one();
        }
        Self::new(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Substitutes `-x` for `x`, negating odd coefficients.
    pub fn reflected(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i % 2 == 1 {
                        c.clone().neg()
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }

    /// Euclidean division: returns `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), Error> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dn = d.coeffs.len();
        if self.coeffs.len() < dn {
            return Ok((Self::zero(), self.clone()));
        }
        let lead = d.coeffs[dn - 1].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dn - 1].clone() / lead.clone();
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let idx = k + i;
                    rem[idx] = rem[idx].clone() - c.clone() * dc.clone();
                }
            }
            quot[k] = c;
        }
        rem.truncate(dn - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }
}

impl<T: Coeff> Neg for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn neg(self) -> DensePolynomial<T> {
        DensePolynomial::new(self.coeffs.iter().map(|c| c.clone().neg()).collect())
    }
}

impl<T: Coeff> Add for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn add(self, rhs: &DensePolynomial<T>) -> DensePolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        DensePolynomial::new(out)
    }
}

impl<T: Coeff> Sub for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn sub(self, rhs: &DensePolynomial<T>) -> DensePolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        DensePolynomial::new(out)
    }
}

impl<T: Coeff> Mul for &DensePolynomial<T> {
    type Output = DensePolynomial<T>;
    fn mul(self, rhs: &DensePolynomial<T>) -> DensePolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePolynomial::new(out)
    }
}

impl<T: Coeff + fmt::Display> fmt::Display for DensePolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})·x")?,
                _ => write!(f, "({c})·x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}
