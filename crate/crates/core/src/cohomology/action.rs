use crate::diagrams::{generate_permutation_group, NodePermutation};
use crate::error::{Error, Result};
use crate::linalg::SmallMatrix;
use crate::weyl::WeylGroup;

/// A finite group `G` of diagram automorphisms acting on a Weyl group.
///
/// `G` is the permutation group generated by the supplied generators (so the
/// action is faithful on nodes). It acts on the lattice through permutation
/// matrices `C_σ` and on `W` by `w ↦ C_σ w C_σ⁻¹`. Both actions are tabulated.
#[derive(Clone, Debug)]
pub struct GroupAction<'w> {
    weyl: &'w WeylGroup,
    generator_perms: Vec<NodePermutation>,
    generators: Vec<usize>,
    elements: Vec<NodePermutation>,
    mult: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    matrices: Vec<SmallMatrix>,
    conj: Vec<Vec<usize>>,
}

/// Builds the action of the group generated by `gens` on `weyl`.
pub fn build_action<'w>(weyl: &'w WeylGroup, gens: &[NodePermutation], max_group: usize) -> Result<GroupAction<'w>> {
    let c = weyl.collection();
    for g in gens {
        if !c.is_automorphism(g) {
            return Err(Error::NotAutomorphism(format!("{g} on {c}")));
        }
    }
    let elements = generate_permutation_group(c.rank(), gens, max_group)?;
    let position = |p: &NodePermutation| {
        elements
            .iter()
            .position(|q| q == p)
            .ok_or_else(|| Error::Internal(format!("{p} missing from its own closure")))
    };
    let mult = elements
        .iter()
        .map(|a| elements.iter().map(|b| position(&a.compose(b))).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    let inverses = elements
        .iter()
        .map(|a| position(&a.inverse()))
        .collect::<Result<Vec<_>>>()?;
    let generators = gens.iter().map(position).collect::<Result<Vec<_>>>()?;
    let matrices: Vec<SmallMatrix> = elements.iter().map(NodePermutation::matrix_small).collect();

    let gram = SmallMatrix::from_int_matrix(weyl.gram())?;
    for m in &matrices {
        if m.transpose().mul(&gram)?.mul(m)? != gram {
            return Err(Error::Internal("permutation matrix does not preserve the pairing".into()));
        }
    }
    let group = weyl.group();
    let conj = matrices
        .iter()
        .map(|c| {
            let ct = c.transpose();
            group
                .elements()
                .iter()
                .map(|w| {
                    let image = c.mul(w)?.mul(&ct)?;
                    group
                        .index_of(&image)
                        .ok_or_else(|| Error::Internal("conjugation does not preserve W".into()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GroupAction {
        weyl,
        generator_perms: gens.to_vec(),
        generators,
        elements,
        mult,
        inverses,
        matrices,
        conj,
    })
}

impl<'w> GroupAction<'w> {
    pub fn weyl(&self) -> &'w WeylGroup {
        self.weyl
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[NodePermutation] {
        &self.elements
    }

    /// The generators as supplied.
    pub fn generator_perms(&self) -> &[NodePermutation] {
        &self.generator_perms
    }

    /// Element indices of the generators; index 0 is the identity.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// `C_σ` for element index `sigma`.
    pub fn matrix(&self, sigma: usize) -> &SmallMatrix {
        &self.matrices[sigma]
    }

    /// Index of `σ ∘ τ`.
    pub fn mul(&self, sigma: usize, tau: usize) -> usize {
        self.mult[sigma][tau]
    }

    pub fn inverse(&self, sigma: usize) -> usize {
        self.inverses[sigma]
    }

    /// Index in `W` of `σ(w) = C_σ w C_σ⁻¹`.
    pub fn act(&self, sigma: usize, w: usize) -> usize {
        self.conj[sigma][w]
    }

    /// Order of element `sigma` in `G`.
    pub fn element_order(&self, sigma: usize) -> usize {
        let mut x = sigma;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, sigma);
            k += 1;
        }
        k
    }

    pub fn is_cyclic_presentation(&self) -> bool {
        self.generators.len() == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::DiagramCollection;
    use crate::weyl::{generate_weyl, DEFAULT_MAX_ORDER};

    fn weyl(spec: &str) -> WeylGroup {
        generate_weyl(&DiagramCollection::parse(spec).unwrap(), DEFAULT_MAX_ORDER).unwrap()
    }

    fn perms(w: &WeylGroup, gens: &[&str]) -> Vec<NodePermutation> {
        gens.iter()
            .map(|g| NodePermutation::parse(g, w.rank()).unwrap())
            .collect()
    }

    #[test]
    fn d4_rotation_is_cyclic_of_order_3() {
        let w = weyl("D4");
        let a = build_action(&w, &perms(&w, &["(1 3 4)"]), 48).unwrap();
        assert_eq!(a.order(), 3);
        assert_eq!(a.element_order(a.generators()[0]), 3);
        assert!(a.is_cyclic_presentation());
    }

    #[test]
    fn trivial_group() {
        let w = weyl("A2");
        let a = build_action(&w, &perms(&w, &["()"]), 48).unwrap();
        assert_eq!(a.order(), 1);
        assert_eq!(a.generators(), &[0]);
    }

    #[test]
    fn component_swap() {
        let w = weyl("A2+A2");
        let a = build_action(&w, &perms(&w, &["(1 3)(2 4)"]), 48).unwrap();
        assert_eq!(a.order(), 2);
        let a = build_action(&w, &perms(&w, &["(1 2)", "(1 3)(2 4)"]), 48).unwrap();
        assert_eq!(a.order(), 8);
    }

    #[test]
    fn rejects_non_automorphism_and_bound() {
        let w = weyl("A3");
        assert!(matches!(
            build_action(&w, &perms(&w, &["(1 2)"]), 48),
            Err(Error::NotAutomorphism(_))
        ));
        let w = weyl("D4");
        assert!(matches!(
            build_action(&w, &perms(&w, &["(1 3 4)", "(3 4)"]), 5),
            Err(Error::OrderBound { .. })
        ));
    }

    #[test]
    fn action_is_by_automorphisms_of_w() {
        let w = weyl("D4");
        let a = build_action(&w, &perms(&w, &["(1 3 4)", "(3 4)"]), 48).unwrap();
        let g = w.group();
        for sigma in 0..a.order() {
            for x in [1usize, 5, 17, 100] {
                for y in [2usize, 9, 150] {
                    let xy = g.mul_index(x, y).unwrap();
                    assert_eq!(a.act(sigma, xy), g.mul_index(a.act(sigma, x), a.act(sigma, y)).unwrap());
                }
            }
        }
    }
}
