use crate::diagrams::{FoldedDiagram, NodePermutation, OrbitKind};
use crate::error::{Error, Result};
use crate::linalg::SmallMatrix;
use crate::weyl::{reflection_from_gram, MatrixGroup, WeylGroup};

/// Outcome of comparing the Weyl group of a quotient diagram with the
/// invariants of the parent Weyl group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingReport {
    /// `|W^G|`, by scanning the parent group.
    pub fixed_order: usize,
    /// Order of the subgroup generated by the folding images.
    pub image_order: usize,
    /// Order of the Weyl group of the folded pairing, enumerated directly.
    pub quotient_order: usize,
    /// Classical order of the recognised quotient type, if any.
    pub classified_order: Option<u128>,
    /// Every image commutes with every `C_σ`.
    pub images_invariant: bool,
    /// The images satisfy the Coxeter relations of the quotient reflections,
    /// so the folding map is a well-defined homomorphism.
    pub relations_hold: bool,
    /// Each image acts on the orbit-sum sublattice as the matching quotient
    /// reflection.
    pub restriction_agrees: bool,
    pub is_isomorphism: bool,
}

fn check_consistent(parent: &WeylGroup, subgroup: &[NodePermutation], folded: &FoldedDiagram) -> Result<()> {
    let n = parent.rank();
    if folded.basis.rows() != n {
        return Err(Error::Inconsistent(format!(
            "folded basis lives in rank {}, parent has rank {n}",
            folded.basis.rows()
        )));
    }
    for p in subgroup {
        if p.degree() != n {
            return Err(Error::Inconsistent(format!("{p} has degree {}", p.degree())));
        }
        for o in &folded.orbits {
            if o.nodes.iter().any(|&x| o.nodes.binary_search(&p.apply(x)).is_err()) {
                return Err(Error::Inconsistent(format!("{p} does not preserve orbit {:?}", o.nodes)));
            }
        }
    }
    Ok(())
}

/// Images of the quotient's basic reflections in the parent Weyl group:
/// the product of the reflections in an orthogonal orbit, or
/// `∏ s_a s_b s_a` over the bonded pairs `(a, b)` of a paired orbit.
pub fn folding_embed(
    parent: &WeylGroup,
    subgroup: &[NodePermutation],
    folded: &FoldedDiagram,
) -> Result<Vec<SmallMatrix>> {
    check_consistent(parent, subgroup, folded)?;
    let s = parent.generators();
    let mut images = Vec::with_capacity(folded.orbits.len());
    for o in &folded.orbits {
        let mut m = SmallMatrix::identity(parent.rank());
        match o.kind {
            OrbitKind::Orthogonal => {
                for &x in &o.nodes {
                    m = m.mul(&s[x])?;
                }
            }
            OrbitKind::Paired => {
                for &(a, b) in &o.pairs {
                    m = m.mul(&s[a])?.mul(&s[b])?.mul(&s[a])?;
                }
            }
        }
        if !parent.contains(&m) {
            return Err(Error::Internal("folding image outside the Weyl group".into()));
        }
        images.push(m);
    }
    Ok(images)
}

fn is_fixed(w: &SmallMatrix, perms: &[SmallMatrix]) -> Result<bool> {
    for c in perms {
        if c.mul(w)?.mul(&c.transpose())? != *w {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that folding gives an isomorphism `W(T/G) → W(T)^G` by counting:
/// the images must be invariant, satisfy the quotient's Coxeter relations,
/// and generate a group of the same order as both `W^G` and `W(T/G)`.
pub fn verify_folding_iso(
    parent: &WeylGroup,
    subgroup: &[NodePermutation],
    folded: &FoldedDiagram,
    max_order: u128,
) -> Result<FoldingReport> {
    let images = folding_embed(parent, subgroup, folded)?;
    let perms: Vec<SmallMatrix> = subgroup.iter().map(NodePermutation::matrix_small).collect();

    let mut fixed_order = 0;
    for w in parent.elements() {
        if is_fixed(w, &perms)? {
            fixed_order += 1;
        }
    }
    let mut images_invariant = true;
    for m in &images {
        images_invariant &= is_fixed(m, &perms)?;
    }
    let image_group = parent.group().subgroup(images.clone())?;

    let r = folded.rank();
    let quotient_gens = (0..r)
        .map(|i| reflection_from_gram(&folded.gram, i))
        .collect::<Result<Vec<_>>>()?;
    let quotient = MatrixGroup::generate(r, quotient_gens.clone(), max_order)?;

    let mut relations_hold = true;
    for i in 0..r {
        for j in i..r {
            let m = quotient_gens[i]
                .mul(&quotient_gens[j])?
                .order(quotient.order() as u64)?
                .ok_or_else(|| Error::Internal("quotient reflection product of infinite order".into()))?;
            relations_hold &= images[i].mul(&images[j])?.pow(m)?.is_identity();
        }
    }

    let basis = &folded.basis;
    let mut restriction_agrees = true;
    for (img, refl) in images.iter().zip(&quotient_gens) {
        let lhs = img.to_int_matrix().mul(basis)?;
        let rhs = basis.mul(&refl.to_int_matrix())?;
        restriction_agrees &= lhs == rhs;
    }

    let classified_order = folded.classified_type.as_ref().and_then(|t| t.weyl_order());
    let is_isomorphism = images_invariant
        && relations_hold
        && image_group.order() == fixed_order
        && quotient.order() == image_group.order()
        && classified_order.is_none_or(|o| o == quotient.order() as u128);
    Ok(FoldingReport {
        fixed_order,
        image_order: image_group.order(),
        quotient_order: quotient.order(),
        classified_order,
        images_invariant,
        relations_hold,
        restriction_agrees,
        is_isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::{fold, DiagramCollection};
    use crate::weyl::{generate_weyl, DEFAULT_MAX_ORDER};

    fn run(spec: &str, gens: &[&str]) -> (WeylGroup, Vec<NodePermutation>, FoldedDiagram) {
        let c = DiagramCollection::parse(spec).unwrap();
        let gens: Vec<_> = gens
            .iter()
            .map(|g| NodePermutation::parse(g, c.rank()).unwrap())
            .collect();
        let sub = c.generate_subgroup(&gens, 48).unwrap();
        let f = fold(&c, &sub).unwrap();
        (generate_weyl(&c, DEFAULT_MAX_ORDER).unwrap(), sub, f)
    }

    #[test]
    fn identity_subgroup_images_are_generators() {
        let (w, sub, f) = run("D4", &["()"]);
        assert_eq!(folding_embed(&w, &sub, &f).unwrap(), w.generators());
    }

    #[test]
    fn a2_flip_paired_image() {
        let (w, sub, f) = run("A2", &["(1 2)"]);
        let s = w.generators();
        let img = folding_embed(&w, &sub, &f).unwrap();
        let sts = s[0].mul(&s[1]).unwrap().mul(&s[0]).unwrap();
        assert_eq!(img, vec![sts.clone()]);
        assert_eq!(sts, s[1].mul(&s[0]).unwrap().mul(&s[1]).unwrap());
    }

    #[test]
    fn a3_flip_orthogonal_image() {
        let (w, sub, f) = run("A3", &["(1 3)"]);
        let s = w.generators();
        let img = folding_embed(&w, &sub, &f).unwrap();
        assert_eq!(img[0], s[0].mul(&s[2]).unwrap());
        assert_eq!(img[1], s[1]);
        let r = verify_folding_iso(&w, &sub, &f, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(r.fixed_order, 8);
        assert!(r.is_isomorphism && r.restriction_agrees);
    }

    #[test]
    fn d4_triality() {
        let (w, sub, f) = run("D4", &["(1 3 4)"]);
        let r = verify_folding_iso(&w, &sub, &f, DEFAULT_MAX_ORDER).unwrap();
        assert_eq!((r.fixed_order, r.image_order, r.quotient_order), (12, 12, 12));
        assert_eq!(r.classified_order, Some(12));
        assert!(r.is_isomorphism);
    }

    #[test]
    fn mismatched_inputs() {
        let (w, _, _) = run("D4", &["()"]);
        let (_, sub, f) = run("A3", &["(1 3)"]);
        assert!(matches!(folding_embed(&w, &sub, &f), Err(Error::Inconsistent(_))));
    }
}
