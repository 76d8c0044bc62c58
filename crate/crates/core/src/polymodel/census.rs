use std::collections::BTreeMap;

use serde::Serialize;

use super::polyhedron::dist2;
use super::{require_valid, Polyhedron};
use crate::error::Result;

/// Face counts keyed by polygon size, with a per-size regularity flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCensus {
    pub counts: BTreeMap<usize, usize>,
    /// `true` when every face of that size has equal exact edge lengths and
    /// equal exact vertex angles.
    pub regular: BTreeMap<usize, bool>,
}

impl FaceCensus {
    pub fn all_regular(&self) -> bool {
        self.regular.values().all(|&r| r)
    }

    /// Compact form such as `{3:8, 4:18}`.
    pub fn summary(&self) -> String {
        let parts: Vec<String> = self.counts.iter().map(|(n, c)| format!("{n}:{c}")).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

pub fn face_census(p: &Polyhedron) -> Result<FaceCensus> {
    require_valid(p)?;
    let mut counts = BTreeMap::new();
    let mut regular = BTreeMap::new();
    for fi in 0..p.face_count() {
        let n = p.faces()[fi].len();
        *counts.entry(n).or_insert(0) += 1;
        let r = face_is_regular(p, fi);
        regular
            .entry(n)
            .and_modify(|acc: &mut bool| *acc &= r)
            .or_insert(r);
    }
    Ok(FaceCensus { counts, regular })
}

/// Exact regularity test for one planar face.
pub fn face_is_regular(p: &Polyhedron, f: usize) -> bool {
    let pts = p.face_points(f);
    let n = pts.len();
    let len0 = dist2(&pts[0], &pts[1]);
    if (1..n).any(|i| dist2(&pts[i], &pts[(i + 1) % n]) != len0) {
        return false;
    }
    let corner = |i: usize| {
        let v = &pts[i];
        let prev = &pts[(i + n - 1) % n];
        let next = &pts[(i + 1) % n];
        (prev - v).dot(&(next - v))
    };
    let c0 = corner(0);
    (1..n).all(|i| corner(i) == c0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Point3;
    use crate::polymodel::convex_hull;

    #[test]
    fn rectangle_box_is_not_regular() {
        let mut pts = Vec::new();
        for x in [-1, 1] {
            for y in [-1, 1] {
                for z in [-2, 2] {
                    pts.push(Point3::ints(x, y, z, 1));
                }
            }
        }
        let boxy = convex_hull(&pts).unwrap();
        let c = face_census(&boxy).unwrap();
        assert_eq!(c.counts, BTreeMap::from([(4, 6)]));
        assert!(!c.all_regular());
    }

    #[test]
    fn rhombus_is_not_regular() {
        // Equal sides, unequal angles.
        let pts = [
            Point3::ints(0, 0, 0, 1),
            Point3::ints(2, 1, 0, 1),
            Point3::ints(0, 2, 0, 1),
            Point3::ints(-2, 1, 0, 1),
            Point3::ints(0, 1, 3, 1),
        ];
        let pyramid = convex_hull(&pts).unwrap();
        let base = (0..pyramid.face_count())
            .find(|&f| pyramid.faces()[f].len() == 4)
            .unwrap();
        assert!(!face_is_regular(&pyramid, base));
    }
}
