use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Dense matrix of exact rationals. `BigRational` keeps every entry reduced
/// with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
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

    /// The integer matrix with the same entries, if all entries are integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if !self.is_integral() {
            return None;
        }
        let data: Vec<BigInt> = self.data.iter().map(|x| x.to_integer()).collect();
        IntMatrix::new(self.rows, self.cols, data).ok()
    }

    /// Product `self * rhs` with an integer right factor.
    pub fn mul_int(&self, rhs: &IntMatrix) -> Result<RatMatrix> {
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
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        acc += self.get(i, k) * BigRational::from_integer(b.clone());
                    }
                }
                data.push(acc);
            }
        }
        RatMatrix::new(self.rows, rhs.cols(), data)
    }
}

impl From<&IntMatrix> for RatMatrix {
    fn from(m: &IntMatrix) -> Self {
        RatMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .entries()
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for RatMatrix {
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
