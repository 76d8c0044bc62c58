//! Star ("pyramids on the faces") and strut-frame variants of a base solid.
//!
//! Stars stay exact and feed the symmetry engine; frames are float meshes
//! for export.

mod mesh;
mod skeleton;
mod star;

pub use mesh::{MeshComponent, TriangleMesh};
pub use skeleton::{skeleton, FrameParams};
pub use star::{apex_heights, parse_rational, star, StarParams};
