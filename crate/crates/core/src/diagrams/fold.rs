use crate::diagrams::classify::{classify_gram, QuotientType};
use crate::diagrams::permutation::check_is_group;
use crate::diagrams::{DiagramCollection, NodePermutation};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// Distinct nodes of the orbit are pairwise orthogonal.
    Orthogonal,
    /// The orbit splits into bonded pairs, orthogonal across pairs.
    Paired,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Sorted global node indices (0-based).
    pub nodes: Vec<usize>,
    pub kind: OrbitKind,
    /// For `Paired` orbits, the bonded pairs `(a, b)` with `a < b`.
    pub pairs: Vec<(usize, usize)>,
}

/// Quotient of a diagram collection by a group of automorphisms, realised
/// inside the parent lattice as the span of orbit sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedDiagram {
    pub orbits: Vec<Orbit>,
    /// `rank x orbits` matrix whose columns are the orbit sums.
    pub basis: IntMatrix,
    /// Pairing of the orbit sums, `Bᵀ A B`.
    pub gram: IntMatrix,
    pub classified_type: Option<QuotientType>,
}

impl FoldedDiagram {
    pub fn rank(&self) -> usize {
        self.orbits.len()
    }
}

/// Folds `c` by `subgroup`, which must be a group of automorphisms of `c`.
pub fn fold(c: &DiagramCollection, subgroup: &[NodePermutation]) -> Result<FoldedDiagram> {
    let n = c.rank();
    check_is_group(n, subgroup)?;
    for p in subgroup {
        if !c.is_automorphism(p) {
            return Err(Error::NotAutomorphism(format!("{p} on {c}")));
        }
    }

    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut nodes: Vec<usize> = subgroup.iter().map(|p| p.apply(i)).collect();
        nodes.sort_unstable();
        nodes.dedup();
        for &x in &nodes {
            seen[x] = true;
        }
        orbits.push(classify_orbit(c, nodes)?);
    }

    let r = orbits.len();
    let mut basis = IntMatrix::zeros(n, r);
    for (k, o) in orbits.iter().enumerate() {
        for &x in &o.nodes {
            basis.set(x, k, 1.into());
        }
    }
    let gram = basis.transpose().mul(&c.gram_matrix())?.mul(&basis)?;
    if !gram.is_negative_definite()? {
        return Err(Error::Internal(format!("folded pairing of {c} is not negative definite")));
    }
    let classified_type = classify_gram(&gram);
    Ok(FoldedDiagram {
        orbits,
        basis,
        gram,
        classified_type,
    })
}

fn classify_orbit(c: &DiagramCollection, nodes: Vec<usize>) -> Result<Orbit> {
    let bonded = |a: usize, b: usize| c.pairing(a, b) != 0;
    let partners: Vec<Vec<usize>> = nodes
        .iter()
        .map(|&a| nodes.iter().copied().filter(|&b| b != a && bonded(a, b)).collect())
        .collect();
    if partners.iter().all(Vec::is_empty) {
        return Ok(Orbit {
            nodes,
            kind: OrbitKind::Orthogonal,
            pairs: Vec::new(),
        });
    }
    if nodes.len().is_multiple_of(2) && partners.iter().all(|p| p.len() == 1) {
        let pairs = nodes
            .iter()
            .zip(&partners)
            .filter(|(&a, p)| a < p[0])
            .map(|(&a, p)| (a, p[0]))
            .collect();
        return Ok(Orbit {
            nodes,
            kind: OrbitKind::Paired,
            pairs,
        });
    }
    Err(Error::InvalidOrbit(nodes.iter().map(|x| x + 1).collect()))
}
