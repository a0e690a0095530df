use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::diagrams::DiagramCollection;
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, SmallMatrix};

/// A permutation of global node indices, stored as the image of each node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodePermutation {
    images: Vec<usize>,
}

impl NodePermutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Syntax {
                    input: format!("{images:?}"),
                    message: "not a permutation".into(),
                });
            }
        }
        Ok(Self { images })
    }

    /// Parses disjoint cycle notation over 1-based node indices, e.g.
    /// `"(1 3 4)"`, `"(1 4)(2 3)"`; `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let syntax = |message: String| Error::Syntax {
            input: text.to_string(),
            message,
        };
        let mut images: Vec<usize> = (0..degree).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(syntax("empty permutation; write () for the identity".into()));
        }
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| syntax("expected '('".into()))?;
            let close = open
                .find(')')
                .ok_or_else(|| syntax("unclosed cycle".into()))?;
            let body = &open[..close];
            rest = open[close + 1..].trim_start();
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    let k: usize = t
                        .parse()
                        .map_err(|_| syntax(format!("bad node index {t:?}")))?;
                    if k == 0 || k > degree {
                        return Err(Error::IndexOutOfRange {
                            index: k,
                            rank: degree,
                        });
                    }
                    Ok(k - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for &x in &cycle {
                if std::mem::replace(&mut moved[x], true) {
                    return Err(syntax(format!("node {} appears twice", x + 1)));
                }
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ rhs`: apply `rhs` first.
    pub fn compose(&self, rhs: &NodePermutation) -> NodePermutation {
        NodePermutation {
            images: rhs.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> NodePermutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        NodePermutation { images }
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Disjoint cycles (0-based), each starting at its smallest node,
    /// fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// 0/1 matrix whose column `j` is the basis vector of `self(j)`.
    pub fn matrix_small(&self) -> SmallMatrix {
        SmallMatrix::from_fn(self.degree(), |i, j| (self.images[j] == i) as i64)
            .expect("0/1 entries")
    }
}

impl fmt::Display for NodePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl DiagramCollection {
    /// Whether `p` preserves multiplicities and the pairing between nodes.
    pub fn is_automorphism(&self, p: &NodePermutation) -> bool {
        let n = self.rank();
        p.degree() == n
            && (0..n).all(|i| self.multiplicity(i) == self.multiplicity(p.apply(i)))
            && (0..n).all(|i| (0..i).all(|j| self.pairing(i, j) == self.pairing(p.apply(i), p.apply(j))))
    }

    fn require_automorphism(&self, p: &NodePermutation) -> Result<()> {
        if self.is_automorphism(p) {
            Ok(())
        } else {
            Err(Error::NotAutomorphism(format!("{p} on {self}")))
        }
    }

    /// Permutation matrix `C` of an automorphism, columns being images of
    /// basis vectors.
    pub fn permutation_matrix(&self, p: &NodePermutation) -> Result<IntMatrix> {
        self.require_automorphism(p)?;
        Ok(IntMatrix::from_fn(self.rank(), self.rank(), |i, j| {
            (p.apply(j) == i) as i64
        }))
    }

    /// Every diagram automorphism, found by backtracking over node images.
    /// Sorted by image list, so the identity comes first.
    pub fn automorphisms(&self) -> Vec<NodePermutation> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_automorphism(0, &mut images, &mut used, &mut out);
        out
    }

    fn extend_automorphism(
        &self,
        i: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<NodePermutation>,
    ) {
        let n = self.rank();
        if i == n {
            out.push(NodePermutation {
                images: images.clone(),
            });
            return;
        }
        for t in 0..n {
            if used[t] || self.pairing(i, i) != self.pairing(t, t) {
                continue;
            }
            if (0..i).any(|j| self.pairing(i, j) != self.pairing(t, images[j])) {
                continue;
            }
            images[i] = t;
            used[t] = true;
            self.extend_automorphism(i + 1, images, used, out);
            used[t] = false;
        }
        images[i] = usize::MAX;
    }

    /// The group generated by `gens` (all checked to be automorphisms),
    /// identity first, then in breadth-first order. Fails if the group has
    /// more than `bound` elements.
    pub fn generate_subgroup(&self, gens: &[NodePermutation], bound: usize) -> Result<Vec<NodePermutation>> {
        for g in gens {
            self.require_automorphism(g)?;
        }
        generate_permutation_group(self.rank(), gens, bound)
    }
}

/// Full automorphism group of a collection.
pub fn diagram_automorphisms(c: &DiagramCollection) -> Vec<NodePermutation> {
    c.automorphisms()
}

/// Breadth-first closure of a set of permutations, identity first.
pub fn generate_permutation_group(
    degree: usize,
    gens: &[NodePermutation],
    bound: usize,
) -> Result<Vec<NodePermutation>> {
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::Inconsistent(format!(
            "permutation {g} has degree {}, expected {degree}",
            g.degree()
        )));
    }
    let id = NodePermutation::identity(degree);
    let mut seen: HashSet<NodePermutation> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                if elements.len() >= bound {
                    return Err(Error::OrderBound {
                        order: elements.len() as u128 + 1,
                        bound: bound as u128,
                    });
                }
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

/// Checks that `elements` is a group: contains the identity and is closed
/// under composition (closure implies inverses for finite sets).
pub fn check_is_group(degree: usize, elements: &[NodePermutation]) -> Result<()> {
    let set: HashSet<&NodePermutation> = elements.iter().collect();
    if !set.contains(&NodePermutation::identity(degree)) {
        return Err(Error::NotAGroup("identity missing".into()));
    }
    for a in elements {
        if a.degree() != degree {
            return Err(Error::NotAGroup(format!("{a} has the wrong degree")));
        }
        for b in elements {
            let ab = a.compose(b);
            if !set.contains(&ab) {
                return Err(Error::NotAGroup(format!("{a} ∘ {b} = {ab} is missing")));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coll(s: &str) -> DiagramCollection {
        DiagramCollection::parse(s).unwrap()
    }

    #[test]
    fn parse_and_display_cycles() {
        let p = NodePermutation::parse("(1 3 4)", 4).unwrap();
        assert_eq!(p.images(), &[2, 1, 3, 0]);
        assert_eq!(p.to_string(), "(1 3 4)");
        let q = NodePermutation::parse("(1 4)(2 3)", 4).unwrap();
        assert_eq!(q.to_string(), "(1 4)(2 3)");
        assert!(NodePermutation::parse("()", 3).unwrap().is_identity());
        assert_eq!(NodePermutation::parse("()", 3).unwrap().to_string(), "()");
    }

    #[test]
    fn parse_errors() {
        assert!(NodePermutation::parse("(1 5)", 4).is_err());
        assert!(NodePermutation::parse("(1 2)(2 3)", 4).is_err());
        assert!(NodePermutation::parse("(1 2", 4).is_err());
        assert!(NodePermutation::parse("1 2", 4).is_err());
        assert!(NodePermutation::parse("(0 1)", 4).is_err());
        assert!(NodePermutation::parse("", 4).is_err());
    }

    #[test]
    fn compose_order_inverse() {
        let p = NodePermutation::parse("(1 3 4)", 4).unwrap();
        assert_eq!(p.order(), 3);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).to_string(), "(1 4 3)");
    }

    #[test]
    fn d4_rotation_matrix() {
        let c = coll("D4");
        let p = NodePermutation::parse("(1 3 4)", 4).unwrap();
        let g = c.permutation_matrix(&p).unwrap();
        assert_eq!(
            g.to_i64_rows().unwrap(),
            vec![
                vec![0, 0, 0, 1],
                vec![0, 1, 0, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 1, 0]
            ]
        );
        assert_eq!(p.matrix_small().to_int_matrix(), g);
    }

    #[test]
    fn permutation_matrix_rejects_non_automorphism() {
        let c = coll("A3");
        let p = NodePermutation::parse("(1 2)", 3).unwrap();
        assert!(matches!(c.permutation_matrix(&p), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn a2_flip_matrix() {
        let c = coll("A2");
        let p = NodePermutation::parse("(1 2)", 2).unwrap();
        assert_eq!(c.permutation_matrix(&p).unwrap().to_i64_rows().unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert!(c
            .permutation_matrix(&NodePermutation::identity(2))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn automorphism_group_orders() {
        let order = |s: &str| coll(s).automorphisms().len();
        assert_eq!(order("A1"), 1);
        for n in 2..=8 {
            assert_eq!(order(&format!("A{n}")), 2);
        }
        assert_eq!(order("D4"), 6);
        for n in 5..=8 {
            assert_eq!(order(&format!("D{n}")), 2);
        }
        assert_eq!(order("E6"), 2);
        assert_eq!(order("E7"), 1);
        assert_eq!(order("E8"), 1);
        assert_eq!(order("A2+A2"), 8);
        assert_eq!(order("A1+A1"), 2);
        // multiplicities rule out flips of non-simply-laced chains
        assert_eq!(order("B3"), 1);
        assert_eq!(order("G2"), 1);
    }

    #[test]
    fn automorphisms_form_a_group() {
        for s in ["D4", "A2+A2", "A3+A1+A1", "E6"] {
            let c = coll(s);
            let auts = c.automorphisms();
            check_is_group(c.rank(), &auts).unwrap();
            assert!(auts[0].is_identity());
            let a = c.gram_matrix();
            for p in &auts {
                let m = c.permutation_matrix(p).unwrap();
                assert_eq!(m.transpose().mul(&a).unwrap().mul(&m).unwrap(), a, "{s} {p}");
            }
        }
    }

    #[test]
    fn subgroup_generation() {
        let c = coll("D4");
        let g = NodePermutation::parse("(1 3 4)", 4).unwrap();
        assert_eq!(c.generate_subgroup(std::slice::from_ref(&g), 48).unwrap().len(), 3);
        let t = NodePermutation::parse("(3 4)", 4).unwrap();
        assert_eq!(c.generate_subgroup(&[g, t], 48).unwrap().len(), 6);
        assert!(matches!(
            generate_permutation_group(4, &[NodePermutation::parse("(1 2 3 4)", 4).unwrap()], 3),
            Err(Error::OrderBound { .. })
        ));
    }
}
