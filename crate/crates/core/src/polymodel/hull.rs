//! Exact 3D convex hull: incremental insertion with exact `orient3d`,
//! then coplanar triangles merged into maximal polygonal facets.

use std::collections::{HashMap, HashSet};

use super::Polyhedron;
use crate::error::{Error, Result};
use crate::exactfield::{collinear, orient3d, Point3, QuadRat};

type Tri = [usize; 3];

/// Convex hull of `points` with canonical vertex and face ordering.
///
/// Points on the hull surface that are not corners (edge interiors, facet
/// interiors) are not vertices of the result.
pub fn convex_hull(points: &[Point3]) -> Result<Polyhedron> {
    let pts = dedup(points)?;
    if pts.len() < 4 {
        return Err(Error::DegenerateInput(format!(
            "convex hull needs at least 4 distinct points, got {}",
            pts.len()
        )));
    }
    let seed = initial_simplex(&pts)?;
    let mut tris = seed_faces(&pts, seed)?;

    for (i, p) in pts.iter().enumerate() {
        if seed.contains(&i) {
            continue;
        }
        let mut visible = Vec::with_capacity(tris.len());
        for t in &tris {
            visible.push(orient3d(&pts[t[0]], &pts[t[1]], &pts[t[2]], p)? > 0);
        }
        if !visible.iter().any(|&v| v) {
            continue;
        }
        let hidden_edges: HashSet<(usize, usize)> = tris
            .iter()
            .zip(&visible)
            .filter(|(_, &v)| !v)
            .flat_map(|(t, _)| tri_edges(t))
            .collect();
        let mut next = Vec::with_capacity(tris.len() + 4);
        let mut horizon = Vec::new();
        for (t, &v) in tris.iter().zip(&visible) {
            if v {
                for (a, b) in tri_edges(t) {
                    if hidden_edges.contains(&(b, a)) {
                        horizon.push((a, b));
                    }
                }
            } else {
                next.push(*t);
            }
        }
        next.extend(horizon.into_iter().map(|(a, b)| [a, b, i]));
        tris = next;
    }

    let faces = merge_coplanar(&pts, &tris);
    Ok(Polyhedron::new(pts, faces, true)?.canonicalized())
}

fn dedup(points: &[Point3]) -> Result<Vec<Point3>> {
    let Some(first) = points.first() else {
        return Err(Error::DegenerateInput("no points".into()));
    };
    let d = first.d();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in points {
        if p.d() != d {
            return Err(Error::FieldMix {
                left: d,
                right: p.d(),
            });
        }
        if seen.insert(p.clone()) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn initial_simplex(pts: &[Point3]) -> Result<[usize; 4]> {
    let a = 0;
    let b = (1..pts.len())
        .find(|&i| pts[i] != pts[a])
        .ok_or_else(|| Error::DegenerateInput("all points coincide".into()))?;
    let c = (1..pts.len())
        .find(|&i| !collinear(&pts[a], &pts[b], &pts[i]))
        .ok_or_else(|| Error::DegenerateInput("all points are collinear".into()))?;
    for i in 1..pts.len() {
        if orient3d(&pts[a], &pts[b], &pts[c], &pts[i])? != 0 {
            return Ok([a, b, c, i]);
        }
    }
    Err(Error::DegenerateInput("all points are coplanar".into()))
}

fn seed_faces(pts: &[Point3], [a, b, c, d]: [usize; 4]) -> Result<Vec<Tri>> {
    // Orient so the fourth point is behind every face.
    let (b, c) = if orient3d(&pts[a], &pts[b], &pts[c], &pts[d])? > 0 {
        (c, b)
    } else {
        (b, c)
    };
    Ok(vec![[a, b, c], [a, d, b], [b, d, c], [c, d, a]])
}

fn tri_edges(t: &Tri) -> [(usize, usize); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
}

/// Supporting plane `n·x = k` normalized so the first non-zero normal
/// component is ±1 (orientation preserved).
fn plane_key(pts: &[Point3], t: &Tri) -> [QuadRat; 4] {
    let (a, b, c) = (&pts[t[0]], &pts[t[1]], &pts[t[2]]);
    let n = (b - a).cross(&(c - a));
    let k = n.dot(a);
    let lead = [&n.x, &n.y, &n.z]
        .into_iter()
        .find(|v| !v.is_zero())
        .expect("hull triangles are non-degenerate")
        .abs();
    let s = lead.recip().expect("non-zero");
    [&n.x * &s, &n.y * &s, &n.z * &s, &k * &s]
}

fn merge_coplanar(pts: &[Point3], tris: &[Tri]) -> Vec<Vec<usize>> {
    let mut groups: HashMap<[QuadRat; 4], Vec<Tri>> = HashMap::new();
    let mut order = Vec::new();
    for t in tris {
        let key = plane_key(pts, t);
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push(*t);
    }
    let mut faces = Vec::with_capacity(order.len());
    for key in order {
        let group = &groups[&key];
        let edges: HashSet<(usize, usize)> = group.iter().flat_map(tri_edges).collect();
        let succ: HashMap<usize, usize> = edges
            .iter()
            .filter(|(a, b)| !edges.contains(&(*b, *a)))
            .map(|&(a, b)| (a, b))
            .collect();
        let start = *succ.keys().min().expect("facet has a boundary");
        let mut cycle = vec![start];
        let mut cur = succ[&start];
        while cur != start {
            cycle.push(cur);
            cur = succ[&cur];
        }
        faces.push(drop_collinear(pts, cycle));
    }
    faces
}

/// Removes polygon corners that lie on the segment between their neighbours.
fn drop_collinear(pts: &[Point3], mut cycle: Vec<usize>) -> Vec<usize> {
    loop {
        let n = cycle.len();
        let straight = (0..n).find(|&i| {
            collinear(
                &pts[cycle[(i + n - 1) % n]],
                &pts[cycle[i]],
                &pts[cycle[(i + 1) % n]],
            )
        });
        match straight {
            Some(i) if n > 3 => {
                cycle.remove(i);
            }
            _ => return cycle,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymodel::validate;

    fn cube_corners() -> Vec<Point3> {
        let mut v = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-1, 1] {
                    v.push(Point3::ints(x, y, z, 1));
                }
            }
        }
        v
    }

    #[test]
    fn cube_from_corners() {
        let h = convex_hull(&cube_corners()).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.face_count(), 6);
        assert!(h.faces().iter().all(|f| f.len() == 4));
        let r = validate(&h);
        assert!(r.is_valid(), "{:?}", r.defects);
        assert!(r.convexity_verified);
    }

    #[test]
    fn interior_point_dropped() {
        let mut pts = cube_corners();
        pts.push(Point3::origin(1));
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert!(!h.vertices().contains(&Point3::origin(1)));
    }

    #[test]
    fn edge_and_face_points_dropped() {
        let mut pts = vec![Point3::ints(0, 1, 1, 1), Point3::ints(0, 0, 1, 1)];
        pts.extend(cube_corners());
        pts.push(Point3::ints(1, 0, 0, 1));
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.vertex_count(), 8);
        assert_eq!(h.face_count(), 6);
    }

    #[test]
    fn degenerate_inputs() {
        let flat = [
            Point3::ints(0, 0, 0, 1),
            Point3::ints(1, 0, 0, 1),
            Point3::ints(0, 1, 0, 1),
            Point3::ints(1, 1, 0, 1),
        ];
        assert!(matches!(convex_hull(&flat), Err(Error::DegenerateInput(_))));
        assert!(matches!(
            convex_hull(&flat[..3]),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn order_independent() {
        let pts = cube_corners();
        let mut rev = pts.clone();
        rev.reverse();
        assert_eq!(convex_hull(&pts).unwrap(), convex_hull(&rev).unwrap());
    }
}
