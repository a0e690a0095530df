//! Non-abelian `H¹(G, W)` for a group of diagram automorphisms acting on a
//! Weyl group, and its image in `H¹(G, GL(Λ ⊗ ℚ))`.

mod action;
mod character;
mod classes;
mod cocycle;
mod kernel;
mod suite;

pub use action::{build_action, GroupAction};
pub use character::{is_trivial_in_gl, twist_character, CharacterTable};
pub use classes::{are_cohomologous, h1_classes, CohomologyClassSet};
pub use cocycle::{
    check_cocycle, cocycle_from_generator_values, enumerate_cocycles, enumerate_cocycles_cyclic,
    enumerate_cocycles_general, Cocycle,
};
pub use kernel::{h1_kernel, kernel_report, ClassReport, KernelReport};
pub use suite::{verify_kernel_suite, CaseReport, Check, PrintedMatch, Suite, SuiteCase, SuiteReport};

use crate::weyl::DEFAULT_MAX_ORDER;

/// Size limits for a cohomology computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest Weyl group that may be enumerated.
    pub max_order: u128,
    /// Largest acting group `G`.
    pub max_group: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            max_group: 48,
        }
    }
}
