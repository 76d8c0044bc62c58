//! Exact symmetry groups, orbits, combinatorial isomorphism and the
//! RCO / pseudo-RCO classifier.

mod classify;
mod group;
mod isomorphism;

pub use classify::{classify, congruent_up_to_scale, Evidence, SolidKind, SolidTag};
pub use group::{symmetry_group, SimilarityMatch, SymmetryReport, SymmetrySummary};
pub use isomorphism::{are_isomorphic, canonical_code, verify_witness, IsoWitness};
