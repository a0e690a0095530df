use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_integers(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_integers(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `(x - r)^k`
    pub fn linear_power(r: &BigRational, k: usize) -> Self {
        let mut p = Self::new(vec![BigRational::one()]);
        let factor = Self::new(vec![-r.clone(), BigRational::one()]);
        for _ in 0..k {
            p = p.mul(&factor);
        }
        p
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    /// Synthetic division by `x - r`: returns quotient and remainder.
    pub fn div_linear(&self, r: &BigRational) -> (Polynomial, BigRational) {
        if self.is_zero() {
            return (self.clone(), BigRational::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![BigRational::zero(); n - 1];
        let mut carry = BigRational::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return (Polynomial::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Multiplicity of `r` as a root (0 if `r` is not a root).
    pub fn root_multiplicity(&self, r: &BigRational) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, rem) = p.div_linear(r);
            if !rem.is_zero() {
                return Ok(k);
            }
            k += 1;
            p = q;
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = deg == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn multiplicity_of_double_root() {
        let p = Polynomial::linear_power(&q(1), 2);
        assert_eq!(p, Polynomial::from_i64(&[1, -2, 1]));
        assert_eq!(p.root_multiplicity(&q(1)).unwrap(), 2);
        assert_eq!(p.root_multiplicity(&q(-1)).unwrap(), 0);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            Polynomial::new(vec![]).root_multiplicity(&q(1)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn rational_root() {
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let p = Polynomial::from_i64(&[-3, 5, 2]);
        assert_eq!(p.root_multiplicity(&BigRational::new(1.into(), 2.into())).unwrap(), 1);
        assert_eq!(p.eval(&q(-3)), q(0));
    }

    #[test]
    fn display() {
        assert_eq!(Polynomial::from_i64(&[1, 2, 3, 2, 1]).to_string(), "x^4 + 2x^3 + 3x^2 + 2x + 1");
        assert_eq!(Polynomial::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
    }
}
