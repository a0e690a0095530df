use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, RatMatrix};
use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1 } else { 0 })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(BigInt::from(f(i, j)));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from rows of machine integers. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Entries as machine integers, if every entry fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect())
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Exact matrix product `self * rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact product with a rational matrix, `self * rhs`.
    pub fn mul_rat(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != rhs.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows,
                self.cols,
                rhs.rows(),
                rhs.cols()
            )));
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols());
        for i in 0..self.rows {
            for j in 0..rhs.cols() {
                let mut acc = BigRational::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc += BigRational::from_integer(a.clone()) * rhs.get(k, j);
                    }
                }
                data.push(acc);
            }
        }
        RatMatrix::new(self.rows, rhs.cols(), data)
    }

    pub fn add(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &IntMatrix, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Result<IntMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect();
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn trace(&self) -> Result<BigInt> {
        self.require_square()?;
        Ok((0..self.rows).map(|i| self.get(i, i)).sum())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Leading principal `k x k` submatrix.
    pub fn leading_minor(&self, k: usize) -> IntMatrix {
        IntMatrix::from_big_fn(k, k, |i, j| self.get(i, j).clone())
    }

    fn from_big_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Negative definite iff the leading principal minors alternate in sign,
    /// starting negative.
    pub fn is_negative_definite(&self) -> Result<bool> {
        self.require_square()?;
        if !self.is_symmetric() {
            return Ok(false);
        }
        for k in 1..=self.rows {
            let d = self.leading_minor(k).determinant()?;
            let want_negative = k % 2 == 1;
            if d.is_zero() || d.is_negative() != want_negative {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !m.get(r, k).is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        Ok(sign * m.get(n - 1, n - 1))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Exact inverse. Bareiss forward elimination on `[A | I]`, then integral
    /// back substitution against the final pivot, which equals `±det A`.
    pub fn inverse(&self) -> Result<RatMatrix> {
        self.require_square()?;
        let n = self.rows;
        let w = 2 * n;
        let mut m = IntMatrix::zeros(n, w);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, self.get(i, j).clone());
            }
            m.set(i, n + i, BigInt::one());
        }
        let mut prev = BigInt::one();
        for k in 0..n {
            if m.get(k, k).is_zero() {
                let r = (k + 1..n)
                    .find(|&r| !m.get(r, k).is_zero())
                    .ok_or(Error::Singular)?;
                m.swap_rows(k, r);
            }
            for i in k + 1..n {
                for j in k + 1..w {
                    let v = (m.get(i, j) * m.get(k, k) - m.get(i, k) * m.get(k, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, k, BigInt::zero());
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        if d.is_zero() {
            return Err(Error::Singular);
        }
        // Scaled solution: x = d * A^{-1}, integral by Cramer's rule.
        let mut scaled = IntMatrix::zeros(n, n);
        for c in 0..n {
            for i in (0..n).rev() {
                let mut acc = &d * m.get(i, n + c);
                for j in i + 1..n {
                    acc -= m.get(i, j) * scaled.get(j, c);
                }
                let (q, r) = acc.div_rem(m.get(i, i));
                if !r.is_zero() {
                    return Err(Error::Internal(
                        "inexact division in fraction-free back substitution".into(),
                    ));
                }
                scaled.set(i, c, q);
            }
        }
        let data = scaled
            .data
            .into_iter()
            .map(|x| BigRational::new(x, d.clone()))
            .collect();
        RatMatrix::new(n, n, data)
    }

    /// Characteristic polynomial `det(xI - A)` by Faddeev–LeVerrier.
    /// Every division in the recurrence is exact for integer input.
    pub fn char_poly(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&m)?;
            for i in 0..n {
                let v = next.get(i, i) + &coeffs[n - k + 1];
                next.set(i, i, v);
            }
            let t = self.mul(&next)?.trace()?;
            let (q, r) = (-t).div_rem(&BigInt::from(k));
            if !r.is_zero() {
                return Err(Error::Internal("inexact Faddeev-LeVerrier step".into()));
            }
            coeffs[n - k] = q;
            m = next;
        }
        Ok(Polynomial::from_integers(coeffs))
    }

    /// Order-preserving byte encoding of the row-major entries, prefixed by
    /// the shape. Each entry is a sign byte followed by the length-prefixed
    /// big-endian magnitude.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&(self.rows as u32).to_be_bytes());
        out.extend_from_slice(&(self.cols as u32).to_be_bytes());
        for x in &self.data {
            let (sign, mag) = x.to_bytes_be();
            let neg = sign == num_bigint::Sign::Minus;
            out.push(if neg { 0 } else { 1 });
            let len = (mag.len() as u32).to_be_bytes();
            if neg {
                // invert so that larger magnitudes sort first
                out.extend(len.iter().map(|b| !b));
                out.extend(mag.iter().map(|b| !b));
            } else {
                out.extend_from_slice(&len);
                out.extend_from_slice(&mag);
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
