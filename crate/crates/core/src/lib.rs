//! Exact computations with root lattices of Dynkin diagrams, their Weyl
//! groups as integer matrix groups, folding by diagram automorphisms, and
//! the non-abelian cohomology set `H¹(G, W)` for a finite group `G` acting
//! on a collection of diagrams.
//!
//! Conventions used throughout:
//! - Pairings are negative definite: a node of multiplicity `n` has
//!   self-intersection `-2n`.
//! - Matrices act on column vectors; column `j` is the image of basis
//!   vector `j`.
//! - Library indices are 0-based; the text grammars (`"(1 3 4)"`) are
//!   1-based.

pub mod cohomology;
pub mod diagrams;
mod error;
pub mod linalg;
pub mod weyl;

pub use cohomology::{
    build_action, enumerate_cocycles, h1_classes, h1_kernel, is_trivial_in_gl, twist_character, verify_kernel_suite,
    Bounds, CharacterTable, Cocycle, CohomologyClassSet, GroupAction, KernelReport, Suite, SuiteReport,
};
pub use diagrams::{
    diagram_automorphisms, dynkaut_integrality, fold, parse_diagram_spec, DiagramCollection, DiagramType,
    DynkinDiagram, FoldedDiagram, IntegralityReport, NodePermutation, OrbitKind,
};
pub use error::{Error, Result};
pub use linalg::{char_poly, mat_inverse, mat_mul, rational_root_multiplicity, IntMatrix, Polynomial, RatMatrix, SmallMatrix};
pub use weyl::{
    contains_minus_identity, folding_embed, generate_weyl, involution_classes, reflection, verify_folding_iso,
    FoldingReport, InvolutionClass, MatrixGroup, WeylGroup, DEFAULT_MAX_ORDER,
};
