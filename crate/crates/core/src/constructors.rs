//! Catalog solids and the cut/gyrate operators that derive one solid from
//! another. Every operator rebuilds faces through the exact convex hull.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactfield::{Axis, Isometry, Point3, QuadRat};
use crate::polymodel::{convex_hull, dist2, require_valid, Polyhedron};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolidName {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
    Rco,
    PseudoRco,
}

impl SolidName {
    pub const ALL: [SolidName; 7] = [
        SolidName::Tetrahedron,
        SolidName::Cube,
        SolidName::Octahedron,
        SolidName::Dodecahedron,
        SolidName::Icosahedron,
        SolidName::Rco,
        SolidName::PseudoRco,
    ];

    pub fn is_platonic(self) -> bool {
        !matches!(self, SolidName::Rco | SolidName::PseudoRco)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SolidName::Tetrahedron => "tetrahedron",
            SolidName::Cube => "cube",
            SolidName::Octahedron => "octahedron",
            SolidName::Dodecahedron => "dodecahedron",
            SolidName::Icosahedron => "icosahedron",
            SolidName::Rco => "rco",
            SolidName::PseudoRco => "pseudo-rco",
        }
    }
}

impl fmt::Display for SolidName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SolidName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SolidName::ALL
            .into_iter()
            .find(|n| n.as_str() == s || n.as_str().replace('-', "_") == s)
            .ok_or_else(|| Error::Parameter(format!("unknown solid '{s}'")))
    }
}

/// Builds any catalog solid.
pub fn build(name: SolidName) -> Result<Polyhedron> {
    match name {
        SolidName::Rco => rco(),
        SolidName::PseudoRco => pseudo_rco(),
        platonic_name => platonic(platonic_name),
    }
}

/// The five Platonic solids in their standard exact coordinates.
pub fn platonic(name: SolidName) -> Result<Polyhedron> {
    let pts = match name {
        SolidName::Tetrahedron => sign_combos(1)
            .into_iter()
            .filter(|[x, y, z]| x * y * z > 0)
            .map(|[x, y, z]| Point3::ints(x, y, z, 1))
            .collect(),
        SolidName::Cube => sign_combos(1)
            .into_iter()
            .map(|[x, y, z]| Point3::ints(x, y, z, 1))
            .collect(),
        SolidName::Octahedron => {
            let mut v = Vec::new();
            for s in [-1, 1] {
                v.push(Point3::ints(s, 0, 0, 1));
                v.push(Point3::ints(0, s, 0, 1));
                v.push(Point3::ints(0, 0, s, 1));
            }
            v
        }
        SolidName::Icosahedron => {
            let phi = QuadRat::golden();
            let mut v = Vec::new();
            for s1 in [-1, 1] {
                for s2 in [-1, 1] {
                    let a = QuadRat::int(s1, 5);
                    let b = phi.scale(&BigRational::from_integer(s2.into()));
                    v.extend(cyclic_perms(&QuadRat::zero(5), &a, &b));
                }
            }
            v
        }
        SolidName::Dodecahedron => {
            let phi = QuadRat::golden();
            let inv_phi = phi.recip()?;
            let mut v: Vec<Point3> = sign_combos(1)
                .into_iter()
                .map(|[x, y, z]| Point3::ints(x, y, z, 5))
                .collect();
            for s1 in [-1, 1] {
                for s2 in [-1, 1] {
                    let a = inv_phi.scale(&BigRational::from_integer(s1.into()));
                    let b = phi.scale(&BigRational::from_integer(s2.into()));
                    v.extend(cyclic_perms(&QuadRat::zero(5), &a, &b));
                }
            }
            v
        }
        other => {
            return Err(Error::Domain(format!("{other} is not a Platonic solid")));
        }
    };
    convex_hull(&pts)
}

fn sign_combos(m: i64) -> Vec<[i64; 3]> {
    let mut out = Vec::with_capacity(8);
    for x in [-m, m] {
        for y in [-m, m] {
            for z in [-m, m] {
                out.push([x, y, z]);
            }
        }
    }
    out
}

fn cyclic_perms(a: &QuadRat, b: &QuadRat, c: &QuadRat) -> [Point3; 3] {
    let p = |x: &QuadRat, y: &QuadRat, z: &QuadRat| Point3 {
        x: x.clone(),
        y: y.clone(),
        z: z.clone(),
    };
    [p(a, b, c), p(b, c, a), p(c, a, b)]
}

/// The rhombicuboctahedron: all permutations of (±1, ±1, ±(1+√2)), edge 2.
pub fn rco() -> Result<Polyhedron> {
    let big = QuadRat::from_parts(1, 1, 1, 1, 2)?;
    let mut pts = Vec::with_capacity(24);
    for [sx, sy, sz] in sign_combos(1) {
        let small = |s: i64| QuadRat::int(s, 2);
        let large = |s: i64| big.scale(&BigRational::from_integer(s.into()));
        pts.push(Point3::new(small(sx), small(sy), large(sz))?);
        pts.push(Point3::new(small(sx), large(sy), small(sz))?);
        pts.push(Point3::new(large(sx), small(sy), small(sz))?);
    }
    convex_hull(&pts)
}

/// The pseudo-rhombicuboctahedron: the RCO with its top square cupola
/// (z > 1) turned by 45°.
pub fn pseudo_rco() -> Result<Polyhedron> {
    gyrate_cap(&rco()?, Axis::Z, &QuadRat::one(2), GyrationAngle::Deg45)
}

/// Brings a solid and a parameter into one field. Only rational values (or
/// rational solids) are lifted; two distinct irrational fields are rejected.
fn unify(p: &Polyhedron, t: &QuadRat) -> Result<(Polyhedron, QuadRat)> {
    let (pd, td) = (p.d(), t.d());
    if pd == td {
        Ok((p.clone(), t.clone()))
    } else if pd == 1 {
        Ok((p.embed(td)?, t.clone()))
    } else if td == 1 {
        Ok((p.clone(), t.embed(pd)?))
    } else {
        Err(Error::FieldMix {
            left: pd,
            right: td,
        })
    }
}

fn require_convex(p: &Polyhedron, op: &str) -> Result<()> {
    if !p.is_convex() {
        return Err(Error::Domain(format!("{op} requires a convex polyhedron")));
    }
    let report = require_valid(p)?;
    if !report.convexity_verified {
        return Err(Error::Domain(format!("{op} requires a convex polyhedron")));
    }
    Ok(())
}

/// Vertex cut: every directed edge `(u, v)` contributes `u + t·(v − u)`.
/// `t = 1/2` rectifies.
pub fn truncate(p: &Polyhedron, t: &QuadRat) -> Result<Polyhedron> {
    let half = QuadRat::frac(1, 2, t.d());
    if t.sign() <= 0 || t.cmp_same_field(&half).is_gt() {
        return Err(Error::Parameter(format!(
            "truncation fraction must lie in (0, 1/2], got {t}"
        )));
    }
    require_convex(p, "truncate")?;
    let (p, t) = unify(p, t)?;
    let mut pts = Vec::new();
    for (u, v) in p.edges() {
        let (pu, pv) = (&p.vertices()[u], &p.vertices()[v]);
        let dir = pv - pu;
        pts.push(pu + &dir.mul_scalar(&t));
        pts.push(pv - &dir.mul_scalar(&t));
    }
    convex_hull(&pts)
}

/// Edge-plus-vertex cut. Each face ring is shrunk by `s` about its centroid
/// and pushed out along its normal by `(1 − s)` times the face plane's
/// distance from the solid's centre:
///
/// `v' = c + s·(v − c) + (1 − s)·proj_N(c − o)`
///
/// with `c` the face centroid, `N` its Newell normal and `o` the vertex
/// centroid of the solid.
pub fn cantellate(p: &Polyhedron, s: &QuadRat) -> Result<Polyhedron> {
    if s.sign() <= 0 || s.cmp_same_field(&QuadRat::one(s.d())).is_ge() {
        return Err(Error::Parameter(format!(
            "cantellation factor must lie in (0, 1), got {s}"
        )));
    }
    require_convex(p, "cantellate")?;
    let (p, s) = unify(p, s)?;
    let one_minus = &QuadRat::one(s.d()) - &s;
    let mut pts = Vec::new();
    for (f, push) in face_push_vectors(&p).into_iter().enumerate() {
        let c = p.face_centroid(f);
        let shift = push.mul_scalar(&one_minus);
        for v in p.face_points(f) {
            let ring = &c + &(&v - &c).mul_scalar(&s);
            pts.push(&ring + &shift);
        }
    }
    convex_hull(&pts)
}

/// Per face, `proj_N(c − o)`: the offset from the solid's centre to the face
/// plane, measured along the face normal.
fn face_push_vectors(p: &Polyhedron) -> Vec<Point3> {
    let o = p.centroid();
    (0..p.face_count())
        .map(|f| {
            let n = p.newell_normal(f);
            let c = p.face_centroid(f);
            let k = &(&c - &o).dot(&n) / &n.norm2();
            n.mul_scalar(&k)
        })
        .collect()
}

/// The cantellation factor making face edges and edge-square edges equal
/// length, solved exactly.
///
/// With `L` a face edge and `D` the distance between the two pushed face
/// centroids across it (`c + proj_N(c − o)`), the new edge lengths are `s·L`
/// and `(1 − s)·D`, so `s = r/(1 + r)` with `r = D/L`. Measured on the first
/// edge; uniform only for edge-transitive inputs. Fails when `r` is not in
/// Q, Q(√2) or Q(√5).
pub fn cantellation_equal_edge_parameter(p: &Polyhedron) -> Result<QuadRat> {
    require_convex(p, "cantellate")?;
    let f0 = 0;
    let face = &p.faces()[f0];
    let (u, v) = (face[0], face[1]);
    let g = (0..p.face_count())
        .find(|&g| {
            let fg = &p.faces()[g];
            (0..fg.len()).any(|i| fg[i] == v && fg[(i + 1) % fg.len()] == u)
        })
        .ok_or_else(|| Error::Domain("edge has no neighbouring face".into()))?;
    let push = face_push_vectors(p);
    let q = |f: usize| &p.face_centroid(f) + &push[f];
    let d2 = dist2(&q(f0), &q(g));
    let l2 = dist2(&p.vertices()[u], &p.vertices()[v]);
    let ratio2 = &d2 / &l2;
    let r = ratio2.sqrt().ok_or_else(|| {
        Error::Domain(format!(
            "equal-edge cantellation needs √({ratio2}), outside the supported fields"
        ))
    })?;
    let one = QuadRat::one(r.d());
    Ok(&r / &(&one + &r))
}

/// Only the 45° turn keeps coordinates inside Q(√2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GyrationAngle {
    Deg45,
}

/// Rotates the cap (vertices with `axis` coordinate above `cut`) by 45°
/// about `axis` and rebuilds the hull. The ring of vertices lying exactly at
/// `cut` must be carried onto itself by the rotation.
pub fn gyrate_cap(
    p: &Polyhedron,
    axis: Axis,
    cut: &QuadRat,
    angle: GyrationAngle,
) -> Result<Polyhedron> {
    let GyrationAngle::Deg45 = angle;
    require_convex(p, "gyrate_cap")?;
    let p = if p.d() == 1 { p.embed(2)? } else { p.clone() };
    if p.d() != 2 {
        return Err(Error::FieldMix {
            left: p.d(),
            right: 2,
        });
    }
    let cut = cut.embed(2)?;
    let rot = Isometry::eighth_turn(axis);

    let mut cap = Vec::new();
    let mut ring = Vec::new();
    let mut rest = Vec::new();
    for v in p.vertices() {
        match axis.coord(v).cmp_same_field(&cut) {
            std::cmp::Ordering::Greater => cap.push(v.clone()),
            std::cmp::Ordering::Equal => ring.push(v.clone()),
            std::cmp::Ordering::Less => rest.push(v.clone()),
        }
    }
    if cap.is_empty() {
        return Err(Error::Parameter(format!("no vertices above the cut at {cut}")));
    }
    let ring_set: std::collections::HashSet<&Point3> = ring.iter().collect();
    if let Some(v) = ring.iter().find(|v| !ring_set.contains(&rot.apply(v))) {
        return Err(Error::GyrationInfeasible(format!(
            "ring vertex {v} is not carried onto the ring by the 45° turn"
        )));
    }
    let count = p.vertex_count();
    let mut pts: Vec<Point3> = cap.iter().map(|v| rot.apply(v)).collect();
    pts.extend(ring);
    pts.extend(rest);
    let out = convex_hull(&pts)?;
    if out.vertex_count() != count {
        return Err(Error::GyrationInfeasible(format!(
            "rotated cap is not in convex position ({} of {count} vertices survive)",
            out.vertex_count()
        )));
    }
    Ok(out)
}
