use crate::cohomology::{
    enumerate_cocycles, h1_classes, twist_character, CharacterTable, Cocycle, CohomologyClassSet, GroupAction,
};
use crate::error::Result;
use crate::linalg::SmallMatrix;

/// One class of `H¹(G, W)` with its image in `H¹(G, GL)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    /// Representative values at the action's generators.
    pub generator_values: Vec<SmallMatrix>,
    pub orbit_size: usize,
    pub character: CharacterTable,
    pub trivial_in_gl: bool,
}

/// The kernel of `H¹(G, W) → H¹(G, GL(Λ ⊗ ℚ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelReport {
    pub group_order: usize,
    pub weyl_order: usize,
    pub cocycle_count: usize,
    pub class_count: usize,
    pub classes: Vec<ClassReport>,
    /// Number of classes mapping to the trivial class.
    pub kernel_size: usize,
    /// The kernel is exactly the trivial class.
    pub trivial_kernel: bool,
}

impl KernelReport {
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.orbit_size).collect()
    }
}

/// Enumerates cocycles, splits them into classes and compares each twisted
/// character with the untwisted one.
pub fn h1_kernel(a: &GroupAction<'_>) -> Result<KernelReport> {
    let cocycles = enumerate_cocycles(a)?;
    let set = h1_classes(a, &cocycles)?;
    kernel_report(a, &cocycles, &set)
}

/// Kernel report from an already computed class set.
pub fn kernel_report(a: &GroupAction<'_>, cocycles: &[Cocycle], set: &CohomologyClassSet) -> Result<KernelReport> {
    let untwisted = CharacterTable::untwisted(a);
    let mut classes = Vec::with_capacity(set.class_count());
    for (rep, &orbit_size) in set.representatives.iter().zip(&set.orbit_sizes) {
        let character = twist_character(a, rep)?;
        classes.push(ClassReport {
            generator_values: rep.generator_values(a).into_iter().cloned().collect(),
            orbit_size,
            trivial_in_gl: character == untwisted,
            character,
        });
    }
    let kernel_size = classes.iter().filter(|c| c.trivial_in_gl).count();
    Ok(KernelReport {
        group_order: a.order(),
        weyl_order: a.weyl().order(),
        cocycle_count: cocycles.len(),
        class_count: classes.len(),
        trivial_kernel: kernel_size == 1 && classes[0].trivial_in_gl,
        kernel_size,
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::build_action;
    use crate::diagrams::{DiagramCollection, NodePermutation};
    use crate::weyl::{generate_weyl, DEFAULT_MAX_ORDER};

    fn kernel(spec: &str, gens: &[&str]) -> KernelReport {
        let c = DiagramCollection::parse(spec).unwrap();
        let w = generate_weyl(&c, DEFAULT_MAX_ORDER).unwrap();
        let gens: Vec<_> = gens
            .iter()
            .map(|g| NodePermutation::parse(g, c.rank()).unwrap())
            .collect();
        h1_kernel(&build_action(&w, &gens, 48).unwrap()).unwrap()
    }

    #[test]
    fn d4_rotation() {
        let r = kernel("D4", &["(1 3 4)"]);
        assert_eq!((r.class_count, r.kernel_size), (2, 1));
        assert!(r.trivial_kernel);
        assert_eq!(r.orbit_sizes().iter().sum::<usize>(), r.cocycle_count);
    }

    #[test]
    fn trivial_group() {
        let r = kernel("E6", &["()"]);
        assert_eq!((r.cocycle_count, r.class_count), (1, 1));
        assert!(r.trivial_kernel);
    }

    #[test]
    fn a3_flip() {
        assert!(kernel("A3", &["(1 3)"]).trivial_kernel);
    }
}
