//! Polyhedron data model, structural validation, face census and exact hull.

mod census;
mod hull;
mod polyhedron;
mod validate;

pub use census::{face_census, face_is_regular, FaceCensus};
pub use hull::convex_hull;
pub(crate) use polyhedron::{dist2, rotate_to_min};
pub use polyhedron::Polyhedron;
pub use validate::{require_valid, validate, ValidationReport};
