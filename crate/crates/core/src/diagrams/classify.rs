use std::fmt;

use num_traits::ToPrimitive;

use crate::diagrams::{DiagramCollection, DiagramType};
use crate::linalg::IntMatrix;

/// Largest rank tried when naming a connected component.
pub const MAX_CLASSIFIED_RANK: usize = 8;

/// A connected component of a pairing matrix identified with a known type,
/// up to simultaneous reordering of the basis and an overall positive scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedComponent {
    pub kind: DiagramType,
    /// The component's pairing equals `scale` times the type's pairing.
    pub scale: i64,
    /// Basis indices of the component (0-based).
    pub nodes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientType {
    pub components: Vec<ClassifiedComponent>,
}

impl QuotientType {
    pub fn weyl_order(&self) -> Option<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.kind.weyl_order()))
    }
}

impl fmt::Display for QuotientType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{}", c.kind)?;
            if c.scale != 1 {
                write!(f, "(x{})", c.scale)?;
            }
        }
        Ok(())
    }
}

/// Names every connected component of `gram`, or `None` if some component
/// matches no known type.
pub fn classify_gram(gram: &IntMatrix) -> Option<QuotientType> {
    let n = gram.rows();
    let g = gram.to_i64_rows()?;
    let mut components = Vec::new();
    for nodes in connected_components(&g) {
        if nodes.len() > MAX_CLASSIFIED_RANK {
            return None;
        }
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| g[i][j]).collect())
            .collect();
        let (kind, scale) = classify_connected(&sub)?;
        components.push(ClassifiedComponent { kind, scale, nodes });
    }
    debug_assert_eq!(components.iter().map(|c| c.nodes.len()).sum::<usize>(), n);
    Some(QuotientType { components })
}

fn connected_components(g: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = g.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let x = comp[k];
            for y in 0..n {
                if !seen[y] && y != x && g[x][y] != 0 {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn classify_connected(sub: &[Vec<i64>]) -> Option<(DiagramType, i64)> {
    let r = sub.len();
    let g = sub.iter().flatten().fold(0, |acc, &x| gcd(acc, x));
    for scale in (1..=g).filter(|d| g % d == 0) {
        for kind in DiagramType::all_of_rank(r) {
            let gram = DiagramCollection::single(kind).gram_matrix();
            let target: Vec<Vec<i64>> = (0..r)
                .map(|i| (0..r).map(|j| scale * gram.get(i, j).to_i64().unwrap()).collect())
                .collect();
            if isomorphic(sub, &target) {
                return Some((kind, scale));
            }
        }
    }
    None
}

/// Whether a bijection `π` exists with `a[i][j] == b[π(i)][π(j)]`.
fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for t in 0..b.len() {
            if used[t] || a[i][i] != b[t][t] {
                continue;
            }
            if (0..i).any(|j| a[i][j] != b[t][map[j]]) {
                continue;
            }
            used[t] = true;
            map.push(t);
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[t] = false;
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}
