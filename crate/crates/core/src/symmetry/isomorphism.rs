//! Combinatorial isomorphism of polyhedral maps by flag propagation, and a
//! relabeling-invariant canonical code.
//!
//! A polyhedron's surface is encoded as darts (directed face edges). `next`
//! walks around a face, `twin` crosses to the neighbouring face. Fixing the
//! image of one dart determines an orientation-preserving isomorphism; the
//! mirrored map (all face cycles reversed) supplies the reflections.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::polymodel::{require_valid, Polyhedron};

#[derive(Debug, Clone)]
struct DartMap {
    origin: Vec<usize>,
    next: Vec<usize>,
    twin: Vec<usize>,
    vertex_count: usize,
    face_count: usize,
}

impl DartMap {
    fn new(p: &Polyhedron, mirrored: bool) -> DartMap {
        let faces: Vec<Vec<usize>> = p
            .faces()
            .iter()
            .map(|f| {
                let mut f = f.clone();
                if mirrored {
                    f.reverse();
                }
                f
            })
            .collect();
        let mut origin = Vec::new();
        let mut next = Vec::new();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        for f in &faces {
            let base = origin.len();
            for (i, &u) in f.iter().enumerate() {
                let v = f[(i + 1) % f.len()];
                index.insert((u, v), base + i);
                origin.push(u);
                next.push(base + (i + 1) % f.len());
            }
        }
        let twin = (0..origin.len())
            .map(|dart| {
                let u = origin[dart];
                let v = origin[next[dart]];
                index[&(v, u)]
            })
            .collect();
        DartMap {
            origin,
            next,
            twin,
            vertex_count: p.vertex_count(),
            face_count: p.face_count(),
        }
    }

    fn len(&self) -> usize {
        self.origin.len()
    }

    /// Extends `a_start -> b_start` along `next` and `twin`. Returns the dart
    /// correspondence when it is a consistent bijection.
    fn propagate(&self, other: &DartMap, a_start: usize, b_start: usize) -> Option<Vec<usize>> {
        let n = self.len();
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; other.len()];
        image[a_start] = b_start;
        used[b_start] = true;
        let mut queue = VecDeque::from([a_start]);
        while let Some(d) = queue.pop_front() {
            let e = image[d];
            for (da, db) in [(self.next[d], other.next[e]), (self.twin[d], other.twin[e])] {
                if image[da] == usize::MAX {
                    if used[db] {
                        return None;
                    }
                    image[da] = db;
                    used[db] = true;
                    queue.push_back(da);
                } else if image[da] != db {
                    return None;
                }
            }
        }
        if image.contains(&usize::MAX) {
            return None;
        }
        Some(image)
    }

    /// Vertex correspondence induced by a dart correspondence, if consistent.
    fn vertex_map(&self, other: &DartMap, darts: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.vertex_count];
        let mut hit = vec![false; other.vertex_count];
        for (d, &e) in darts.iter().enumerate() {
            let (u, w) = (self.origin[d], other.origin[e]);
            if map[u] == usize::MAX {
                if hit[w] {
                    return None;
                }
                map[u] = w;
                hit[w] = true;
            } else if map[u] != w {
                return None;
            }
        }
        Some(map)
    }

    /// Breadth-first relabeling from `start`, emitting `(next, twin)` labels
    /// per dart in discovery order.
    fn bfs_code(&self, start: usize) -> Vec<u32> {
        let n = self.len();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut code = Vec::with_capacity(2 * n);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [self.next[d], self.twin[d]] {
                if label[nb] == u32::MAX {
                    label[nb] = order.len() as u32;
                    order.push(nb);
                }
                code.push(label[nb]);
            }
        }
        code
    }
}

/// A vertex bijection carrying the faces of one polyhedron onto the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    /// `vertex_map[i]` is the image in `b` of vertex `i` of `a`.
    pub vertex_map: Vec<usize>,
    /// True when the map reverses the cyclic order of faces.
    pub orientation_reversing: bool,
}

/// Combinatorial isomorphism test (reflections allowed). Returns a witness
/// mapping when the two surfaces are isomorphic.
pub fn are_isomorphic(a: &Polyhedron, b: &Polyhedron) -> Result<Option<IsoWitness>> {
    require_valid(a)?;
    require_valid(b)?;
    let ma = DartMap::new(a, false);
    if a.vertex_count() != b.vertex_count()
        || a.face_count() != b.face_count()
        || ma.len() != DartMap::new(b, false).len()
    {
        return Ok(None);
    }
    for mirrored in [false, true] {
        let mb = DartMap::new(b, mirrored);
        for start in 0..mb.len() {
            let Some(darts) = ma.propagate(&mb, 0, start) else {
                continue;
            };
            if let Some(vertex_map) = ma.vertex_map(&mb, &darts) {
                return Ok(Some(IsoWitness {
                    vertex_map,
                    orientation_reversing: mirrored,
                }));
            }
        }
    }
    Ok(None)
}

/// Checks that `w` really carries every face of `a` onto a face of `b`.
pub fn verify_witness(a: &Polyhedron, b: &Polyhedron, w: &IsoWitness) -> bool {
    use std::collections::HashSet;
    if w.vertex_map.len() != a.vertex_count() || a.face_count() != b.face_count() {
        return false;
    }
    let mut seen = HashSet::new();
    if !w.vertex_map.iter().all(|&v| v < b.vertex_count() && seen.insert(v)) {
        return false;
    }
    let b_faces: HashSet<Vec<usize>> = b.faces().iter().map(|f| super::group::face_key(f)).collect();
    a.faces().iter().all(|f| {
        let image: Vec<usize> = f.iter().map(|&i| w.vertex_map[i]).collect();
        b_faces.contains(&super::group::face_key(&image))
    })
}

/// Relabeling-invariant string identifying the combinatorial type: the
/// lexicographically least breadth-first dart encoding over every starting
/// dart of the map and of its mirror image.
pub fn canonical_code(p: &Polyhedron) -> Result<String> {
    require_valid(p)?;
    let mut best: Option<Vec<u32>> = None;
    for mirrored in [false, true] {
        let m = DartMap::new(p, mirrored);
        for start in 0..m.len() {
            let code = m.bfs_code(start);
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
        }
    }
    let m = DartMap::new(p, false);
    let body: Vec<String> = best
        .unwrap_or_default()
        .iter()
        .map(u32::to_string)
        .collect();
    Ok(format!(
        "V{}E{}F{}:{}",
        m.vertex_count,
        m.len() / 2,
        m.face_count,
        body.join(".")
    ))
}
