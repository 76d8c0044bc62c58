use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactfield::{Isometry, Matrix3, Point3, QuadRat};
use crate::polymodel::{require_valid, rotate_to_min, Polyhedron};

/// The full (proper and improper) symmetry group of a polyhedron.
#[derive(Debug, Clone)]
pub struct SymmetryReport {
    /// Group elements as exact orthogonal matrices about `center`, sorted.
    pub elements: Vec<Isometry>,
    /// `vertex_permutations[k][i]` is the image of vertex `i` under element `k`.
    pub vertex_permutations: Vec<Vec<usize>>,
    pub order: usize,
    pub rotation_order: usize,
    pub vertex_orbits: Vec<Vec<usize>>,
    pub face_orbits: Vec<Vec<usize>>,
    pub vertex_transitive: bool,
    /// Vertex centroid the isometries act about.
    pub center: Point3,
}

impl SymmetryReport {
    /// Vertex orbit sizes in ascending order.
    pub fn vertex_orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.vertex_orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    pub fn face_orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.face_orbits.iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    }

    pub fn summary(&self) -> SymmetrySummary {
        SymmetrySummary {
            order: self.order,
            rotation_order: self.rotation_order,
            vertex_orbit_sizes: self.vertex_orbit_sizes(),
            face_orbit_sizes: self.face_orbit_sizes(),
            vertex_transitive: self.vertex_transitive,
        }
    }
}

/// Serializable digest of a [`SymmetryReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetrySummary {
    pub order: usize,
    pub rotation_order: usize,
    pub vertex_orbit_sizes: Vec<usize>,
    pub face_orbit_sizes: Vec<usize>,
    pub vertex_transitive: bool,
}

/// A linear map `S` with `Sᵀ·S = μ·I` carrying the centred vertices of one
/// polyhedron onto those of another, faces onto faces.
#[derive(Debug, Clone)]
pub struct SimilarityMatch {
    pub matrix: Matrix3,
    /// Squared scale factor μ.
    pub scale2: QuadRat,
    pub vertex_map: Vec<usize>,
    pub face_map: Vec<usize>,
}

/// Cyclic face key that ignores starting point and direction.
pub(crate) fn face_key(f: &[usize]) -> Vec<usize> {
    let fwd = rotate_to_min(f);
    let mut rev_src = f.to_vec();
    rev_src.reverse();
    let rev = rotate_to_min(&rev_src);
    fwd.min(rev)
}

struct Centered {
    pts: Vec<Point3>,
    norms: Vec<QuadRat>,
}

fn centered(p: &Polyhedron) -> (Point3, Centered) {
    let c = p.centroid();
    let pts: Vec<Point3> = p.vertices().iter().map(|v| v - &c).collect();
    let norms = pts.iter().map(Point3::norm2).collect();
    (c, Centered { pts, norms })
}

/// Indices of three centred vertices spanning space.
fn affine_basis(pts: &[Point3]) -> Result<[usize; 3]> {
    let degenerate = || Error::Domain("vertices do not span three dimensions".into());
    let i = (0..pts.len()).find(|&i| !pts[i].is_zero()).ok_or_else(degenerate)?;
    let j = (0..pts.len())
        .find(|&j| !pts[i].cross(&pts[j]).is_zero())
        .ok_or_else(degenerate)?;
    let n = pts[i].cross(&pts[j]);
    let k = (0..pts.len())
        .find(|&k| !n.dot(&pts[k]).is_zero())
        .ok_or_else(degenerate)?;
    Ok([i, j, k])
}

/// All (or the first) similarities from `a` onto `b` with squared scale `mu`.
///
/// Candidate images of a fixed basis are enumerated with exact Gram matching
/// (norms and pairwise dot products scaled by `mu`); each surviving triple
/// fixes the matrix, which is kept when it permutes vertices and faces.
pub(crate) fn similarity_search(
    a: &Polyhedron,
    b: &Polyhedron,
    mu: &QuadRat,
    first_only: bool,
) -> Result<Vec<SimilarityMatch>> {
    if a.d() != b.d() || a.d() != mu.d() {
        return Err(Error::FieldMix {
            left: a.d(),
            right: b.d(),
        });
    }
    if a.vertex_count() != b.vertex_count() || a.face_count() != b.face_count() {
        return Ok(Vec::new());
    }
    let (_, ca) = centered(a);
    let (_, cb) = centered(b);
    let basis = affine_basis(&ca.pts)?;
    let v = basis.map(|i| ca.pts[i].clone());
    let vinv = Matrix3::from_columns(&v[0], &v[1], &v[2]).inverse()?;

    let lookup: HashMap<&Point3, usize> = cb.pts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let b_faces: HashMap<Vec<usize>, usize> = b
        .faces()
        .iter()
        .enumerate()
        .map(|(i, f)| (face_key(f), i))
        .collect();

    let target_norm = |i: usize| mu * &ca.norms[basis[i]];
    let target_dot = |i: usize, j: usize| mu * &v[i].dot(&v[j]);
    let cand = |k: usize| -> Vec<usize> {
        let t = target_norm(k);
        (0..cb.pts.len()).filter(|&w| cb.norms[w] == t).collect()
    };
    let (c0, c1, c2) = (cand(0), cand(1), cand(2));
    let (d01, d02, d12) = (target_dot(0, 1), target_dot(0, 2), target_dot(1, 2));

    let mut found = Vec::new();
    for &w0 in &c0 {
        for &w1 in &c1 {
            if cb.pts[w0].dot(&cb.pts[w1]) != d01 {
                continue;
            }
            for &w2 in &c2 {
                if cb.pts[w0].dot(&cb.pts[w2]) != d02 || cb.pts[w1].dot(&cb.pts[w2]) != d12 {
                    continue;
                }
                let w = Matrix3::from_columns(&cb.pts[w0], &cb.pts[w1], &cb.pts[w2]);
                let s = w.mul(&vinv);
                if let Some(m) = check_candidate(&s, mu, &ca.pts, &lookup, a, &b_faces) {
                    found.push(m);
                    if first_only {
                        return Ok(found);
                    }
                }
            }
        }
    }
    Ok(found)
}

fn check_candidate(
    s: &Matrix3,
    mu: &QuadRat,
    pts: &[Point3],
    lookup: &HashMap<&Point3, usize>,
    a: &Polyhedron,
    b_faces: &HashMap<Vec<usize>, usize>,
) -> Option<SimilarityMatch> {
    let gram = s.transpose().mul(s);
    let mut scaled_identity = Matrix3::identity(mu.d());
    for i in 0..3 {
        scaled_identity.rows[i][i] = mu.clone();
    }
    if gram != scaled_identity {
        return None;
    }
    let mut vertex_map = Vec::with_capacity(pts.len());
    for p in pts {
        vertex_map.push(*lookup.get(&s.apply(p))?);
    }
    let mut face_map = Vec::with_capacity(a.face_count());
    for f in a.faces() {
        let image: Vec<usize> = f.iter().map(|&i| vertex_map[i]).collect();
        face_map.push(*b_faces.get(&face_key(&image))?);
    }
    Some(SimilarityMatch {
        matrix: s.clone(),
        scale2: mu.clone(),
        vertex_map,
        face_map,
    })
}

/// Exact symmetry group about the vertex centroid.
pub fn symmetry_group(p: &Polyhedron) -> Result<SymmetryReport> {
    require_valid(p)?;
    let (center, _) = centered(p);
    let mu = QuadRat::one(p.d());
    let mut matches = similarity_search(p, p, &mu, false)?;
    matches.sort_by(|x, y| x.matrix.lex_cmp(&y.matrix));

    let mut elements = Vec::with_capacity(matches.len());
    let mut vertex_permutations = Vec::with_capacity(matches.len());
    let mut face_permutations = Vec::with_capacity(matches.len());
    for m in matches {
        elements.push(Isometry::new(m.matrix)?);
        vertex_permutations.push(m.vertex_map);
        face_permutations.push(m.face_map);
    }
    let order = elements.len();
    let rotation_order = elements.iter().filter(|e| e.is_rotation()).count();
    let vertex_orbits = orbits(p.vertex_count(), &vertex_permutations);
    let face_orbits = orbits(p.face_count(), &face_permutations);
    Ok(SymmetryReport {
        vertex_transitive: vertex_orbits.len() == 1,
        elements,
        vertex_permutations,
        order,
        rotation_order,
        vertex_orbits,
        face_orbits,
        center,
    })
}

/// Partition of `0..n` into orbits, each sorted, ordered by smallest member.
fn orbits(n: usize, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit: HashSet<usize> = HashSet::new();
        orbit.insert(start);
        for perm in perms {
            orbit.insert(perm[start]);
        }
        let mut members: Vec<usize> = orbit.into_iter().collect();
        members.sort_unstable();
        for &m in &members {
            label[m] = id;
        }
        out.push(members);
    }
    out
}
