use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::Polyhedron;
use crate::error::{Error, Result};
use crate::exactfield::{collinear, orient3d};

/// Structural findings for a polyhedron. Defects are collected, never thrown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub v_count: usize,
    pub e_count: usize,
    pub f_count: usize,
    pub euler: i64,
    pub manifold: bool,
    pub planar_faces: bool,
    pub convexity_verified: bool,
    pub defects: Vec<String>,
}

impl ValidationReport {
    /// Closed, planar, and (if convexity was claimed) verified convex.
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }

    pub(crate) fn into_result(self) -> Result<ValidationReport> {
        if self.is_valid() {
            Ok(self)
        } else {
            Err(Error::InvalidPolyhedron(self.defects))
        }
    }
}

/// Checks closed orientable 2-manifold structure, exact face planarity and,
/// when the polyhedron claims convexity, exact convexity.
pub fn validate(p: &Polyhedron) -> ValidationReport {
    let mut defects = Vec::new();
    let n = p.vertex_count();
    let mut manifold = true;
    let mut structurally_ok = true;

    for (fi, f) in p.faces().iter().enumerate() {
        if f.len() < 3 {
            defects.push(format!("face {fi} has {} vertices (need at least 3)", f.len()));
            structurally_ok = false;
        }
        if let Some(&bad) = f.iter().find(|&&i| i >= n) {
            defects.push(format!("face {fi} references vertex {bad} of {n}"));
            structurally_ok = false;
        }
        let mut sorted = f.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            defects.push(format!("face {fi} repeats a vertex index"));
            structurally_ok = false;
        }
    }
    if !structurally_ok {
        manifold = false;
    }

    // Directed edge multiplicities.
    let mut directed: HashMap<(usize, usize), usize> = HashMap::new();
    for f in p.faces() {
        for (i, &u) in f.iter().enumerate() {
            let v = f[(i + 1) % f.len()];
            *directed.entry((u, v)).or_default() += 1;
        }
    }
    let mut edge_problems = BTreeMap::new();
    for (&(u, v), &count) in &directed {
        if count > 1 {
            edge_problems.insert((u.min(v), u.max(v)), format!("directed edge {u}->{v} used {count} times (inconsistent orientation or non-manifold edge)"));
        }
        match directed.get(&(v, u)) {
            None => {
                edge_problems.insert(
                    (u.min(v), u.max(v)),
                    format!("edge {u}-{v} is a boundary edge (one face only)"),
                );
            }
            Some(&back) if back != count => {
                edge_problems.insert(
                    (u.min(v), u.max(v)),
                    format!("edge {u}-{v} has unbalanced orientation ({count} vs {back})"),
                );
            }
            _ => {}
        }
    }
    if !edge_problems.is_empty() {
        manifold = false;
        defects.extend(edge_problems.into_values());
    }

    // Every vertex used, with a single fan around it.
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in p.faces() {
        for (i, &u) in f.iter().enumerate() {
            let v = f[(i + 1) % f.len()];
            let w = f[(i + f.len() - 1) % f.len()];
            if u < n {
                incident[u].push((v, w));
            }
        }
    }
    for (vi, fan) in incident.iter().enumerate() {
        if fan.is_empty() {
            defects.push(format!("vertex {vi} is not used by any face"));
            manifold = false;
            continue;
        }
        if manifold && !single_fan(fan) {
            defects.push(format!("vertex {vi} has a non-manifold neighbourhood"));
            manifold = false;
        }
    }

    let mut planar_faces = structurally_ok;
    if structurally_ok {
        for (fi, f) in p.faces().iter().enumerate() {
            if !face_is_planar(p, f) {
                defects.push(format!("face {fi} is not planar"));
                planar_faces = false;
            }
        }
    }

    let mut convexity_verified = false;
    if p.is_convex() && structurally_ok && planar_faces {
        convexity_verified = true;
        'faces: for fi in 0..p.face_count() {
            let normal = p.newell_normal(fi);
            let base = &p.vertices()[p.faces()[fi][0]];
            for v in p.vertices() {
                if (v - base).dot(&normal).sign() > 0 {
                    defects.push(format!("claimed convex but a vertex lies outside face {fi}"));
                    convexity_verified = false;
                    break 'faces;
                }
            }
        }
    }

    let v_count = n;
    let e_count = p.edge_count();
    let f_count = p.face_count();
    ValidationReport {
        v_count,
        e_count,
        f_count,
        euler: v_count as i64 - e_count as i64 + f_count as i64,
        manifold,
        planar_faces,
        convexity_verified,
        defects,
    }
}

/// Validates and returns the report, or the defects as an error.
pub fn require_valid(p: &Polyhedron) -> Result<ValidationReport> {
    validate(p).into_result()
}

/// `fan` holds, per incident face corner, (next vertex, previous vertex).
/// Following prev -> next around the vertex must visit every corner once.
fn single_fan(fan: &[(usize, usize)]) -> bool {
    let by_prev: HashMap<usize, usize> = fan
        .iter()
        .enumerate()
        .map(|(i, &(_, prev))| (prev, i))
        .collect();
    if by_prev.len() != fan.len() {
        return false;
    }
    let mut seen = vec![false; fan.len()];
    let mut cur = 0;
    for _ in 0..fan.len() {
        if seen[cur] {
            return false;
        }
        seen[cur] = true;
        // The corner whose previous vertex is our next vertex is the
        // neighbouring face across the shared edge.
        let next_v = fan[cur].0;
        match by_prev.get(&next_v) {
            Some(&j) => cur = j,
            None => return false,
        }
    }
    seen.iter().all(|&s| s) && cur == 0
}

fn face_is_planar(p: &Polyhedron, f: &[usize]) -> bool {
    let pts: Vec<_> = f.iter().map(|&i| &p.vertices()[i]).collect();
    let a = pts[0];
    let Some(b_idx) = (1..pts.len()).find(|&i| pts[i] != a) else {
        return false;
    };
    let b = pts[b_idx];
    let Some(c) = pts.iter().find(|c| !collinear(a, b, c)) else {
        // All collinear: a degenerate face.
        return false;
    };
    pts.iter()
        .all(|s| orient3d(a, b, c, s).map(|o| o == 0).unwrap_or(false))
}
