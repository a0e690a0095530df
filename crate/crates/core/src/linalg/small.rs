use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::IntMatrix;
use crate::error::{Error, Result};

/// Compact square integer matrix used for finite group elements.
///
/// Entries are stored as `i8`; products accumulate in `i64` and are range
/// checked on the way back, so an out-of-range entry is an error rather than
/// a silent wrap. Elements of crystallographic Weyl groups in a simple-root
/// basis have entries bounded by the highest-root coefficients (at most 6),
/// well inside the range.
///
/// The derived `Ord` is lexicographic over row-major entries, which is also
/// the byte order of [`SmallMatrix::canonical_bytes`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallMatrix {
    dim: usize,
    data: Box<[i8]>,
}

fn narrow(x: i64) -> Result<i8> {
    i8::try_from(x).map_err(|_| Error::EntryOverflow(x))
}

impl SmallMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![0i8; dim * dim].into_boxed_slice();
        for i in 0..dim {
            data[i * dim + i] = 1;
        }
        Self { dim, data }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> i64) -> Result<Self> {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(narrow(f(i, j))?);
            }
        }
        Ok(Self {
            dim,
            data: data.into_boxed_slice(),
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.as_ref().len() != dim) {
            return Err(Error::NotSquare {
                rows: dim,
                cols: rows.first().map_or(0, |r| r.as_ref().len()),
            });
        }
        Self::from_fn(dim, |i, j| rows[i].as_ref()[j])
    }

    pub fn from_int_matrix(m: &IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let mut data = Vec::with_capacity(m.rows() * m.rows());
        for x in m.entries() {
            let v = x.to_i64().ok_or(Error::EntryOverflow(i64::MAX))?;
            data.push(narrow(v)?);
        }
        Ok(Self {
            dim: m.rows(),
            data: data.into_boxed_slice(),
        })
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::new(
            self.dim,
            self.dim,
            self.data.iter().map(|&x| BigInt::from(x)).collect(),
        )
        .expect("shape is consistent")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j] as i64
    }

    pub fn entries(&self) -> &[i8] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn mul(&self, rhs: &SmallMatrix) -> Result<SmallMatrix> {
        let n = self.dim;
        if rhs.dim != n {
            return Err(Error::DimensionMismatch(format!("{n}x{n} times {0}x{0}", rhs.dim)));
        }
        let mut acc = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as i64;
                if a == 0 {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let out = &mut acc[i * n..(i + 1) * n];
                for (o, &b) in out.iter_mut().zip(row) {
                    *o += a * b as i64;
                }
            }
        }
        let data = acc.into_iter().map(narrow).collect::<Result<Vec<_>>>()?;
        Ok(SmallMatrix {
            dim: n,
            data: data.into_boxed_slice(),
        })
    }

    pub fn pow(&self, mut e: u64) -> Result<SmallMatrix> {
        let mut base = self.clone();
        let mut out = SmallMatrix::identity(self.dim);
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SmallMatrix {
        let n = self.dim;
        let mut data = vec![0i8; n * n].into_boxed_slice();
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        SmallMatrix { dim: n, data }
    }

    pub fn neg(&self) -> Result<SmallMatrix> {
        let data = self
            .data
            .iter()
            .map(|&x| narrow(-(x as i64)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SmallMatrix {
            dim: self.dim,
            data: data.into_boxed_slice(),
        })
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == (i == j) as i64))
    }

    /// Smallest `k >= 1` with `self^k = I`, searching up to `limit`.
    pub fn order(&self, limit: u64) -> Result<Option<u64>> {
        let mut p = self.clone();
        for k in 1..=limit {
            if p.is_identity() {
                return Ok(Some(k));
            }
            p = p.mul(self)?;
        }
        Ok(None)
    }

    /// Row-major entries with the sign bit flipped, so byte order equals
    /// numeric lexicographic order. Prefixed by the dimension.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(1 + self.data.len());
        out.push(self.dim as u8);
        out.extend(self.data.iter().map(|&x| (x as u8) ^ 0x80));
        out
    }
}

impl fmt::Debug for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_is_reported() {
        let m = SmallMatrix::from_rows(&[[100i64]]).unwrap();
        assert_eq!(m.mul(&m), Err(Error::EntryOverflow(10000)));
        assert!(SmallMatrix::from_rows(&[[200i64]]).is_err());
    }

    #[test]
    fn ord_matches_canonical_bytes() {
        let vals = [-128i64, -3, -1, 0, 1, 5, 127];
        for a in vals {
            for b in vals {
                let ma = SmallMatrix::from_rows(&[[a]]).unwrap();
                let mb = SmallMatrix::from_rows(&[[b]]).unwrap();
                assert_eq!(ma.cmp(&mb), ma.canonical_bytes().cmp(&mb.canonical_bytes()));
            }
        }
    }

    #[test]
    fn order_of_permutation() {
        let g = SmallMatrix::from_rows(&[[0i64, 0, 0, 1], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0]]).unwrap();
        assert_eq!(g.order(10).unwrap(), Some(3));
        assert_eq!(g.pow(3).unwrap(), SmallMatrix::identity(4));
    }
}
