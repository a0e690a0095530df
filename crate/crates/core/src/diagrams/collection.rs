use std::fmt;
use std::str::FromStr;

use crate::diagrams::{DiagramType, DynkinDiagram};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// A finite collection of Dynkin diagrams whose nodes are numbered
/// consecutively: the first component occupies global indices `0..r_1`,
/// the next `r_1..r_1+r_2`, and so on. (Text interfaces number from 1.)
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramCollection {
    components: Vec<DynkinDiagram>,
    offsets: Vec<usize>,
    rank: usize,
}

impl DiagramCollection {
    pub fn new(components: Vec<DynkinDiagram>) -> Self {
        let mut offsets = Vec::with_capacity(components.len());
        let mut rank = 0;
        for c in &components {
            offsets.push(rank);
            rank += c.rank();
        }
        Self {
            components,
            offsets,
            rank,
        }
    }

    pub fn single(kind: DiagramType) -> Self {
        Self::new(vec![DynkinDiagram::new(kind)])
    }

    /// Parses `TYPE ('+' TYPE)*`, e.g. `"D4"` or `"A3+A1+A1"`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Syntax {
                input: text.to_string(),
                message: "empty diagram spec".into(),
            });
        }
        let components = text
            .split('+')
            .map(|part| part.parse::<DiagramType>().map(DynkinDiagram::new))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(components))
    }

    pub fn components(&self) -> &[DynkinDiagram] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn offset(&self, component: usize) -> usize {
        self.offsets[component]
    }

    /// `(component, local index)` of a global node.
    pub fn locate(&self, node: usize) -> Result<(usize, usize)> {
        if node >= self.rank {
            return Err(Error::IndexOutOfRange {
                index: node,
                rank: self.rank,
            });
        }
        let c = self.offsets.partition_point(|&o| o <= node) - 1;
        Ok((c, node - self.offsets[c]))
    }

    pub fn multiplicity(&self, node: usize) -> u32 {
        let (c, i) = self.locate(node).expect("node in range");
        self.components[c].multiplicities()[i]
    }

    pub fn is_simply_laced(&self) -> bool {
        self.components.iter().all(|d| d.kind().is_simply_laced())
    }

    pub fn pairing(&self, i: usize, j: usize) -> i64 {
        let (ci, li) = self.locate(i).expect("node in range");
        let (cj, lj) = self.locate(j).expect("node in range");
        if ci != cj {
            0
        } else {
            self.components[ci].pairing(li, lj)
        }
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.pairing(i, j) != 0
    }

    /// Intersection matrix of the root lattice: `-2 n_i` on the diagonal,
    /// `max(n_i, n_j)` for adjacent nodes, zero otherwise.
    pub fn gram_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rank, self.rank, |i, j| self.pairing(i, j))
    }

    /// Product of the component Weyl group orders, `None` on overflow.
    pub fn weyl_order(&self) -> Option<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, d| acc.checked_mul(d.kind().weyl_order()))
    }
}

impl FromStr for DiagramCollection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for DiagramCollection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses a diagram spec such as `"A3+A1+A1"`.
pub fn parse_diagram_spec(text: &str) -> Result<DiagramCollection> {
    DiagramCollection::parse(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram(spec: &str) -> Vec<Vec<i64>> {
        DiagramCollection::parse(spec)
            .unwrap()
            .gram_matrix()
            .to_i64_rows()
            .unwrap()
    }

    #[test]
    fn parse_single_node() {
        let c = DiagramCollection::parse("A1").unwrap();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.multiplicity(0), 1);
    }

    #[test]
    fn parse_disjoint_union() {
        let c = DiagramCollection::parse("A2+A2").unwrap();
        assert_eq!(c.components().len(), 2);
        assert_eq!(c.locate(1).unwrap(), (0, 1));
        assert_eq!(c.locate(2).unwrap(), (1, 0));
        assert_eq!(c.to_string(), "A2+A2");
        assert_eq!(c.pairing(1, 2), 0);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(DiagramCollection::parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(DiagramCollection::parse("A2+"), Err(Error::Syntax { .. })));
        assert!(matches!(DiagramCollection::parse("X4"), Err(Error::Syntax { .. })));
        assert!(matches!(DiagramCollection::parse("a4"), Err(Error::Syntax { .. })));
        assert!(matches!(DiagramCollection::parse("D3"), Err(Error::InvalidRank { .. })));
        assert!(matches!(DiagramCollection::parse("E9"), Err(Error::InvalidRank { .. })));
        assert!(DiagramCollection::parse(" A3 + A1 ").is_ok());
    }

    #[test]
    fn gram_a1_a2() {
        assert_eq!(gram("A1"), vec![vec![-2]]);
        assert_eq!(gram("A2"), vec![vec![-2, 1], vec![1, -2]]);
    }

    #[test]
    fn gram_d4_usual_ordering() {
        assert_eq!(
            gram("D4"),
            vec![
                vec![-2, 1, 0, 0],
                vec![1, -2, 1, 1],
                vec![0, 1, -2, 0],
                vec![0, 1, 0, -2],
            ]
        );
    }

    #[test]
    fn gram_with_multiplicities() {
        assert_eq!(gram("G2"), vec![vec![-2, 3], vec![3, -6]]);
        assert_eq!(gram("B2"), vec![vec![-2, 2], vec![2, -4]]);
        assert_eq!(gram("C3")[0], vec![-4, 2, 0]);
    }

    #[test]
    fn weyl_order_of_collection() {
        assert_eq!(DiagramCollection::parse("A2+A2").unwrap().weyl_order(), Some(36));
    }
}
