//! Exact arithmetic over Q(√d) for d ∈ {1, 2, 5} and the geometric
//! predicates built on it.

mod isometry;
mod point;
mod predicates;
mod quadrat;

pub use isometry::{Axis, Isometry, Matrix3};
pub use point::Point3;
pub use predicates::{collinear, orient3d};
pub use quadrat::{ArithOp, QuadRat, RADICANDS};
