use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, SmallMatrix};

/// A finite group of integer matrices, fully enumerated.
///
/// Elements are kept in breadth-first discovery order (identity at index 0)
/// next to a hash index for membership queries.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    dim: usize,
    generators: Vec<SmallMatrix>,
    generator_inverses: Vec<SmallMatrix>,
    elements: Vec<SmallMatrix>,
    index: HashMap<SmallMatrix, usize>,
}

impl MatrixGroup {
    /// Breadth-first closure of `generators` under right multiplication.
    /// Refuses to grow past `max_order` elements.
    pub fn generate(dim: usize, generators: Vec<SmallMatrix>, max_order: u128) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.dim() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "generator of dimension {} in a group of dimension {dim}",
                g.dim()
            )));
        }
        let id = SmallMatrix::identity(dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &generators {
                let y = elements[i].mul(g)?;
                if index.contains_key(&y) {
                    continue;
                }
                if elements.len() as u128 >= max_order {
                    return Err(Error::OrderBound {
                        order: elements.len() as u128 + 1,
                        bound: max_order,
                    });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
        let mut group = Self {
            dim,
            generator_inverses: Vec::new(),
            generators,
            elements,
            index,
        };
        group.generator_inverses = (0..group.generators.len())
            .map(|k| {
                let i = group.index_of(&group.generators[k]).expect("generator is an element");
                group.inverse_index(i).map(|j| group.elements[j].clone())
            })
            .collect::<Result<_>>()?;
        Ok(group)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[SmallMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[SmallMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SmallMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &SmallMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &SmallMatrix) -> bool {
        self.index.contains_key(m)
    }

    /// Index of `elements[i] * elements[j]`.
    pub fn mul_index(&self, i: usize, j: usize) -> Result<usize> {
        let p = self.elements[i].mul(&self.elements[j])?;
        self.index_of(&p)
            .ok_or_else(|| Error::Internal("product left the group".into()))
    }

    /// Index of a product that must lie in the group.
    pub fn locate(&self, m: &SmallMatrix) -> Result<usize> {
        self.index_of(m)
            .ok_or_else(|| Error::Inconsistent(format!("{m} is not in the group")))
    }

    pub fn inverse_index(&self, i: usize) -> Result<usize> {
        let x = &self.elements[i];
        let mut p = x.clone();
        let mut prev = SmallMatrix::identity(self.dim);
        for _ in 0..self.order() {
            if p.is_identity() {
                return self.locate(&prev);
            }
            prev = p.clone();
            p = p.mul(x)?;
        }
        Err(Error::Internal(format!("{x} has no finite order")))
    }

    /// Conjugacy class of element `i`, as element indices in discovery
    /// order, found by closing under `y ↦ g y g⁻¹` for generators `g`.
    pub fn conjugacy_class(&self, i: usize) -> Result<Vec<usize>> {
        let mut seen = HashSet::from([i]);
        let mut class = vec![i];
        let mut k = 0;
        while k < class.len() {
            let y = &self.elements[class[k]];
            for (g, g_inv) in self.generators.iter().zip(&self.generator_inverses) {
                let z = g.mul(y)?.mul(g_inv)?;
                let j = self.locate(&z)?;
                if seen.insert(j) {
                    class.push(j);
                }
            }
            k += 1;
        }
        Ok(class)
    }

    /// Checks the group axioms against the enumerated element set: the
    /// identity is present, right multiplication by each generator stays
    /// inside, and every element has its inverse inside.
    pub fn verify_closure(&self) -> Result<()> {
        if !self.contains(&SmallMatrix::identity(self.dim)) {
            return Err(Error::Internal("identity missing".into()));
        }
        for w in &self.elements {
            for s in &self.generators {
                self.locate(&w.mul(s)?)?;
            }
        }
        for i in 0..self.order() {
            self.inverse_index(i)?;
        }
        Ok(())
    }

    /// Every element preserves `gram`: `Mᵀ A M = A`.
    pub fn preserves_form(&self, gram: &IntMatrix) -> Result<bool> {
        let a = SmallMatrix::from_int_matrix(gram)?;
        for m in &self.elements {
            if m.transpose().mul(&a)?.mul(m)? != a {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Subgroup generated by some elements of this group.
    pub fn subgroup(&self, generators: Vec<SmallMatrix>) -> Result<MatrixGroup> {
        for g in &generators {
            self.locate(g)?;
        }
        MatrixGroup::generate(self.dim, generators, self.order() as u128)
    }
}
