//! Dynkin diagrams, their intersection matrices and automorphisms, and
//! folding by groups of automorphisms.

mod classify;
mod collection;
mod fold;
mod integrality;
mod permutation;
mod types;

pub use classify::{classify_gram, ClassifiedComponent, QuotientType, MAX_CLASSIFIED_RANK};
pub use collection::{parse_diagram_spec, DiagramCollection};
pub use fold::{fold, FoldedDiagram, Orbit, OrbitKind};
pub use integrality::{dynkaut_integrality, IntegralityReport};
pub use permutation::{check_is_group, diagram_automorphisms, generate_permutation_group, NodePermutation};
pub use types::{DiagramType, DynkinDiagram};
