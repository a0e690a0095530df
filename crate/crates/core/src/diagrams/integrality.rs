use num_rational::BigRational;

use crate::diagrams::{DiagramCollection, DynkinDiagram, NodePermutation};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};

/// Integrality of `(C - I) A^{-1}` for a diagram automorphism with
/// permutation matrix `C` and intersection matrix `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub permutation: NodePermutation,
    pub matrix: RatMatrix,
    pub all_integral: bool,
    /// A non-integral entry as `(row, col, value)`, 0-based. The first
    /// non-integral diagonal entry is preferred; otherwise the first
    /// non-integral entry in row-major order.
    pub witness: Option<(usize, usize, BigRational)>,
}

impl IntegralityReport {
    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        self.matrix.get(i, j)
    }
}

/// Computes `(C - I) A^{-1}` for a simply-laced diagram.
pub fn dynkaut_integrality(d: &DynkinDiagram, p: &NodePermutation) -> Result<IntegralityReport> {
    if !d.kind().is_simply_laced() {
        return Err(Error::NotSimplyLaced(d.kind().to_string()));
    }
    let c = DiagramCollection::new(vec![d.clone()]);
    let perm = c.permutation_matrix(p)?;
    let a_inv = c.gram_matrix().inverse()?;
    let diff = perm.sub(&IntMatrix::identity(c.rank()))?;
    let matrix = diff.mul_rat(&a_inv)?;
    let n = matrix.rows();
    let diagonal = (0..n).map(|i| (i, i)).find(|&(i, j)| !matrix.get(i, j).is_integer());
    let any = || {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| !matrix.get(i, j).is_integer())
    };
    let witness = diagonal
        .or_else(any)
        .map(|(i, j)| (i, j, matrix.get(i, j).clone()));
    Ok(IntegralityReport {
        permutation: p.clone(),
        all_integral: witness.is_none(),
        matrix,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::DiagramType;

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    #[test]
    fn a3_flip_witness() {
        let d = DynkinDiagram::new(DiagramType::A(3));
        let p = NodePermutation::parse("(1 3)", 3).unwrap();
        let r = dynkaut_integrality(&d, &p).unwrap();
        assert!(!r.all_integral);
        assert_eq!(r.witness, Some((0, 0, half())));
    }

    #[test]
    fn identity_gives_zero() {
        let d = DynkinDiagram::new(DiagramType::E(6));
        let r = dynkaut_integrality(&d, &NodePermutation::identity(6)).unwrap();
        assert!(r.all_integral);
        assert!(r.matrix.is_zero());
        assert_eq!(r.witness, None);
    }

    #[test]
    fn d5_fork_flip() {
        let d = DynkinDiagram::new(DiagramType::D(5));
        let p = NodePermutation::parse("(4 5)", 5).unwrap();
        let r = dynkaut_integrality(&d, &p).unwrap();
        assert!(!r.all_integral);
        assert_eq!(r.entry(4, 4), &half());
    }

    #[test]
    fn non_ade_rejected() {
        let d = DynkinDiagram::new(DiagramType::B(3));
        assert!(matches!(
            dynkaut_integrality(&d, &NodePermutation::identity(3)),
            Err(Error::NotSimplyLaced(_))
        ));
    }
}
