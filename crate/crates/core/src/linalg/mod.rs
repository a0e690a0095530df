//! Exact integer and rational matrix arithmetic. Nothing in this crate uses
//! floating point.

mod int_matrix;
mod poly;
mod rat_matrix;
mod small;

pub use int_matrix::IntMatrix;
pub use poly::Polynomial;
pub use rat_matrix::RatMatrix;
pub use small::SmallMatrix;

use num_rational::BigRational;

use crate::error::Result;

/// Exact product `a * b`.
pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    a.mul(b)
}

/// Exact inverse; fails on singular input.
pub fn mat_inverse(a: &IntMatrix) -> Result<RatMatrix> {
    a.inverse()
}

/// Monic characteristic polynomial `det(xI - a)`.
pub fn char_poly(a: &IntMatrix) -> Result<Polynomial> {
    a.char_poly()
}

pub fn rational_root_multiplicity(p: &Polynomial, r: &BigRational) -> Result<usize> {
    p.root_multiplicity(r)
}
