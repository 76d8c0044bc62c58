use std::collections::{HashMap, HashSet};

/// One closed triangulated piece of a [`TriangleMesh`].
#[derive(Debug, Clone, PartialEq)]
pub struct MeshComponent {
    pub name: String,
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
}

impl MeshComponent {
    pub fn edge_count(&self) -> usize {
        let edges: HashSet<(usize, usize)> = self
            .triangles
            .iter()
            .flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])])
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.len()
    }

    /// V − E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edge_count() as i64 + self.triangles.len() as i64
    }

    /// Every directed edge appears exactly once and its reverse exactly once,
    /// no triangle is degenerate, and every vertex is used.
    pub fn is_closed_oriented(&self) -> bool {
        let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
        for t in &self.triangles {
            if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
                return false;
            }
            if t.iter().any(|&i| i >= self.vertices.len()) {
                return false;
            }
            for e in [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])] {
                *directed.entry(e).or_default() += 1;
            }
        }
        let used: HashSet<usize> = self.triangles.iter().flatten().copied().collect();
        used.len() == self.vertices.len()
            && directed
                .iter()
                .all(|(&(a, b), &c)| c == 1 && directed.get(&(b, a)) == Some(&1))
    }

    /// Signed enclosed volume; positive for outward-facing orientation.
    pub fn signed_volume(&self) -> f64 {
        self.triangles
            .iter()
            .map(|t| {
                let [a, b, c] = t.map(|i| self.vertices[i]);
                let cross = [
                    b[1] * c[2] - b[2] * c[1],
                    b[2] * c[0] - b[0] * c[2],
                    b[0] * c[1] - b[1] * c[0],
                ];
                (a[0] * cross[0] + a[1] * cross[1] + a[2] * cross[2]) / 6.0
            })
            .sum()
    }
}

/// Float-coordinate triangle soup grouped into closed components.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleMesh {
    pub label: String,
    pub components: Vec<MeshComponent>,
}

impl TriangleMesh {
    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.vertices.len()).sum()
    }

    pub fn triangle_count(&self) -> usize {
        self.components.iter().map(|c| c.triangles.len()).sum()
    }
}
