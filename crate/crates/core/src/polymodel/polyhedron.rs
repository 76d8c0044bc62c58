use std::collections::BTreeSet;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactfield::{Point3, QuadRat};

/// A polyhedral surface: exact vertices plus faces as cyclic index lists,
/// counter-clockwise when seen from outside.
///
/// Construction does not validate; use [`validate`](super::validate) for that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    vertices: Vec<Point3>,
    faces: Vec<Vec<usize>>,
    convex: bool,
}

impl Polyhedron {
    /// Fails only when the vertex list is empty or mixes radicands.
    pub fn new(vertices: Vec<Point3>, faces: Vec<Vec<usize>>, convex: bool) -> Result<Self> {
        let Some(first) = vertices.first() else {
            return Err(Error::DegenerateInput("polyhedron has no vertices".into()));
        };
        let d = first.d();
        if let Some(p) = vertices.iter().find(|p| p.d() != d) {
            return Err(Error::FieldMix {
                left: d,
                right: p.d(),
            });
        }
        Ok(Polyhedron {
            vertices,
            faces,
            convex,
        })
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }

    pub fn d(&self) -> u32 {
        self.vertices[0].d()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Undirected edges `(min, max)` derived from the faces, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for f in &self.faces {
            for (i, &u) in f.iter().enumerate() {
                let v = f[(i + 1) % f.len()];
                if u != v {
                    set.insert((u.min(v), u.max(v)));
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn face_points(&self, f: usize) -> Vec<Point3> {
        self.faces[f]
            .iter()
            .map(|&i| self.vertices[i].clone())
            .collect()
    }

    /// Newell normal: sum of `vᵢ × vᵢ₊₁`; twice the area times the unit normal
    /// for a planar face.
    pub fn newell_normal(&self, f: usize) -> Point3 {
        newell_normal(&self.face_points(f))
    }

    pub fn face_centroid(&self, f: usize) -> Point3 {
        Point3::centroid(&self.face_points(f)).expect("face has vertices")
    }

    pub fn centroid(&self) -> Point3 {
        Point3::centroid(&self.vertices).expect("polyhedron has vertices")
    }

    /// Same solid with coordinates re-expressed in Q(√d).
    pub fn embed(&self, d: u32) -> Result<Polyhedron> {
        if d == self.d() {
            return Ok(self.clone());
        }
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.embed(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polyhedron {
            vertices,
            faces: self.faces.clone(),
            convex: self.convex,
        })
    }

    /// Applies `f` to every vertex, keeping the face structure.
    pub fn map_vertices(&self, f: impl Fn(&Point3) -> Point3) -> Result<Polyhedron> {
        Polyhedron::new(
            self.vertices.iter().map(f).collect(),
            self.faces.clone(),
            self.convex,
        )
    }

    pub fn scaled(&self, r: &BigRational) -> Polyhedron {
        let mut out = self.clone();
        for v in &mut out.vertices {
            *v = v.scale(r);
        }
        out
    }

    /// Vertices sorted lexicographically, faces rotated to their smallest
    /// index and sorted by their sorted index tuple. Unreferenced vertices are
    /// dropped.
    pub fn canonicalized(&self) -> Polyhedron {
        let mut used: Vec<usize> = self.faces.iter().flatten().copied().collect();
        used.sort_unstable();
        used.dedup();
        used.sort_by(|&a, &b| self.vertices[a].lex_cmp(&self.vertices[b]));
        let mut remap = vec![usize::MAX; self.vertices.len()];
        for (new, &old) in used.iter().enumerate() {
            remap[old] = new;
        }
        let vertices = used.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut faces: Vec<Vec<usize>> = self
            .faces
            .iter()
            .map(|f| {
                let mapped: Vec<usize> = f.iter().map(|&i| remap[i]).collect();
                rotate_to_min(&mapped)
            })
            .collect();
        faces.sort_by_key(|f| {
            let mut s = f.clone();
            s.sort_unstable();
            (s, f.clone())
        });
        Polyhedron {
            vertices,
            faces,
            convex: self.convex,
        }
    }

    #[cfg(test)]
    pub(crate) fn with_convex(mut self, convex: bool) -> Polyhedron {
        self.convex = convex;
        self
    }
}

/// Rotates a cyclic sequence so it starts at its smallest element.
pub(crate) fn rotate_to_min(f: &[usize]) -> Vec<usize> {
    let Some(start) = f.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i) else {
        return Vec::new();
    };
    f[start..].iter().chain(&f[..start]).copied().collect()
}

pub(crate) fn newell_normal(pts: &[Point3]) -> Point3 {
    let d = pts[0].d();
    let mut n = Point3::origin(d);
    for (i, p) in pts.iter().enumerate() {
        let q = &pts[(i + 1) % pts.len()];
        n = &n + &p.cross(q);
    }
    n
}

/// Squared length of the segment `pq`.
pub(crate) fn dist2(p: &Point3, q: &Point3) -> QuadRat {
    (p - q).norm2()
}

impl std::fmt::Debug for Polyhedron {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Polyhedron")
            .field("d", &self.d())
            .field("vertices", &self.vertices.len())
            .field("faces", &self.faces)
            .field("convex", &self.convex)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotate_to_min_keeps_cycle() {
        assert_eq!(rotate_to_min(&[5, 2, 7, 3]), vec![2, 7, 3, 5]);
    }

    #[test]
    fn newell_of_square() {
        let pts = [
            Point3::ints(1, -1, 1, 1),
            Point3::ints(1, 1, 1, 1),
            Point3::ints(-1, 1, 1, 1),
            Point3::ints(-1, -1, 1, 1),
        ];
        assert_eq!(newell_normal(&pts), Point3::ints(0, 0, 8, 1));
    }

    #[test]
    fn empty_rejected() {
        assert!(Polyhedron::new(vec![], vec![], false).is_err());
    }
}
