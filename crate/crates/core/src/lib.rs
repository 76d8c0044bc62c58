//! Exact-arithmetic polyhedron toolkit.
//!
//! Builds the Platonic solids, the rhombicuboctahedron (RCO) and the
//! pseudo-rhombicuboctahedron, derives solids with exact truncation,
//! cantellation and cupola gyration, erects star pyramids and strut frames,
//! and computes exact symmetry groups and combinatorial isomorphism.

pub mod cli;
pub mod constructors;
pub mod error;
pub mod exactfield;
pub mod io;
pub mod polymodel;
pub mod symmetry;
pub mod variants;

pub use error::{Error, Result};
