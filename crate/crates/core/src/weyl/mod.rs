//! Weyl groups of root lattices as finite groups of integer matrices.

mod classes;
mod folding;
mod group;

pub use classes::{involution_classes, InvolutionClass};
pub use folding::{folding_embed, verify_folding_iso, FoldingReport};
pub use group::MatrixGroup;

use num_traits::ToPrimitive;

use crate::diagrams::DiagramCollection;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, SmallMatrix};

/// Default ceiling on generated group orders. Covers every type of rank at
/// most 8 except `E_7` and `E_8`; `E_7` needs an explicit override.
pub const DEFAULT_MAX_ORDER: u128 = 2_000_000;

/// Reflection in basis vector `i` for the pairing `gram`:
/// `D ↦ D + (D·E_i / n_i) E_i` where `E_i·E_i = -2 n_i`.
pub fn reflection_from_gram(gram: &IntMatrix, i: usize) -> Result<SmallMatrix> {
    let n = gram.rows();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, rank: n });
    }
    let g = |a: usize, b: usize| gram.get(a, b).to_i64().ok_or(Error::EntryOverflow(i64::MAX));
    let self_pairing = g(i, i)?;
    if self_pairing >= 0 || self_pairing % 2 != 0 {
        return Err(Error::Internal(format!(
            "basis vector {} has self-pairing {self_pairing}, expected -2n",
            i + 1
        )));
    }
    let mult = -self_pairing / 2;
    let mut coeff = vec![0i64; n];
    for (j, c) in coeff.iter_mut().enumerate() {
        let p = g(i, j)?;
        if p % mult != 0 {
            return Err(Error::Internal(format!(
                "reflection in node {} is not integral on node {}",
                i + 1,
                j + 1
            )));
        }
        *c = p / mult;
    }
    SmallMatrix::from_fn(n, |r, j| (r == j) as i64 + if r == i { coeff[j] } else { 0 })
}

/// Basic reflection in a node of a diagram collection (0-based).
pub fn reflection(c: &DiagramCollection, node: usize) -> Result<SmallMatrix> {
    reflection_from_gram(&c.gram_matrix(), node)
}

/// Weyl group of a diagram collection, generated by its basic reflections.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    collection: DiagramCollection,
    gram: IntMatrix,
    group: MatrixGroup,
}

impl WeylGroup {
    pub fn collection(&self) -> &DiagramCollection {
        &self.collection
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn rank(&self) -> usize {
        self.collection.rank()
    }

    /// Basic reflections, one per node.
    pub fn generators(&self) -> &[SmallMatrix] {
        self.group.generators()
    }

    pub fn elements(&self) -> &[SmallMatrix] {
        self.group.elements()
    }

    pub fn contains(&self, m: &SmallMatrix) -> bool {
        self.group.contains(m)
    }

    pub fn index_of(&self, m: &SmallMatrix) -> Option<usize> {
        self.group.index_of(m)
    }
}

/// Enumerates the Weyl group of `c`. The classical order is checked against
/// `max_order` before any work is done, and the enumerated order must agree
/// with it.
pub fn generate_weyl(c: &DiagramCollection, max_order: u128) -> Result<WeylGroup> {
    let expected = c.weyl_order().unwrap_or(u128::MAX);
    if expected > max_order {
        return Err(Error::OrderBound {
            order: expected,
            bound: max_order,
        });
    }
    let gram = c.gram_matrix();
    let gens = (0..c.rank())
        .map(|i| reflection_from_gram(&gram, i))
        .collect::<Result<Vec<_>>>()?;
    let group = MatrixGroup::generate(c.rank(), gens, max_order)?;
    if group.order() as u128 != expected {
        return Err(Error::Internal(format!(
            "enumerated {} elements for {c}, expected {expected}",
            group.order()
        )));
    }
    Ok(WeylGroup {
        collection: c.clone(),
        gram,
        group,
    })
}

/// Whether `-I` lies in the group.
pub fn contains_minus_identity(w: &WeylGroup) -> bool {
    SmallMatrix::identity(w.rank())
        .neg()
        .map(|m| w.contains(&m))
        .unwrap_or(false)
}
