//! Independent reference implementations used by the integration tests.
//! None of these reuse the library's hull, symmetry, isomorphism or rounding
//! code; only the field arithmetic is shared.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use petgraph::graph::UnGraph;

use polyexact::exactfield::{Point3, QuadRat};
use polyexact::polymodel::Polyhedron;

// ---------------------------------------------------------------- hull ----

fn det3(u: &Point3, v: &Point3, w: &Point3) -> QuadRat {
    // Cofactor expansion along the first row.
    let t1 = &u.x * &(&(&v.y * &w.z) - &(&v.z * &w.y));
    let t2 = &u.y * &(&(&v.x * &w.z) - &(&v.z * &w.x));
    let t3 = &u.z * &(&(&v.x * &w.y) - &(&v.y * &w.x));
    &(&t1 - &t2) + &t3
}

/// Sign of the 4×4 determinant |p 1; q 1; r 1; s 1| expanded as a 3×3 of
/// differences.
pub fn brute_orient(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> i32 {
    det3(&(q - p), &(r - p), &(s - p)).sign()
}

/// Facets of the convex hull as sets of points, by testing every triple of
/// points for a supporting plane. O(n⁴); fine for a few dozen points.
pub fn brute_hull_faces(points: &[Point3]) -> BTreeSet<Vec<String>> {
    let n = points.len();
    let mut faces: HashSet<Vec<usize>> = HashSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (p, q, r) = (&points[i], &points[j], &points[k]);
                let normal = (q - p).cross(&(r - p));
                if normal.is_zero() {
                    continue;
                }
                let mut pos = false;
                let mut neg = false;
                let mut on = Vec::new();
                for (m, s) in points.iter().enumerate() {
                    match normal.dot(&(s - p)).sign() {
                        1 => pos = true,
                        -1 => neg = true,
                        _ => on.push(m),
                    }
                }
                if pos && neg {
                    continue;
                }
                // Keep only the corners of the facet polygon.
                let corners: Vec<usize> = on
                    .iter()
                    .copied()
                    .filter(|&m| !strictly_between_any(points, &on, m))
                    .collect();
                faces.insert(corners);
            }
        }
    }
    faces.into_iter().map(|f| key_of(points, &f)).collect()
}

fn strictly_between_any(points: &[Point3], set: &[usize], m: usize) -> bool {
    // m is not a corner if it lies in a segment or triangle spanned by other
    // coplanar points (Carathéodory in the plane).
    let others: Vec<usize> = set.iter().copied().filter(|&x| x != m && points[x] != points[m]).collect();
    let x = &points[m];
    for (ia, &a) in others.iter().enumerate() {
        for &b in &others[ia + 1..] {
            if in_segment(&points[a], &points[b], x) {
                return true;
            }
            for &c in &others {
                if c != a && c != b && in_triangle(&points[a], &points[b], &points[c], x) {
                    return true;
                }
            }
        }
    }
    false
}

fn in_segment(a: &Point3, b: &Point3, x: &Point3) -> bool {
    let ab = b - a;
    let ax = x - a;
    ab.cross(&ax).is_zero() && ab.dot(&ax).sign() > 0 && ab.dot(&ax).cmp_same_field(&ab.norm2()).is_lt()
}

fn in_triangle(a: &Point3, b: &Point3, c: &Point3, x: &Point3) -> bool {
    let n = (b - a).cross(&(c - a));
    if n.is_zero() {
        return false;
    }
    let s1 = (b - a).cross(&(x - a)).dot(&n).sign();
    let s2 = (c - b).cross(&(x - b)).dot(&n).sign();
    let s3 = (a - c).cross(&(x - c)).dot(&n).sign();
    s1 >= 0 && s2 >= 0 && s3 >= 0
}

fn point_key(p: &Point3) -> String {
    format!("{} {} {}", p.x, p.y, p.z)
}

fn key_of(points: &[Point3], idx: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = idx.iter().map(|&i| point_key(&points[i])).collect();
    v.sort();
    v.dedup();
    v
}

/// Faces of a polyhedron in the same point-set form as [`brute_hull_faces`].
pub fn face_point_sets(p: &Polyhedron) -> BTreeSet<Vec<String>> {
    p.faces().iter().map(|f| key_of(p.vertices(), f)).collect()
}

// ------------------------------------------------------------ symmetry ----

/// Candidate orthogonal matrices: the 48 signed permutation matrices, and
/// optionally each of them followed by an eighth turn about z.
fn candidates(with_eighth_turn: bool) -> Vec<[[QuadRat; 3]; 3]> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::new();
    for perm in perms {
        for signs in 0..8 {
            let mut m: [[QuadRat; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| QuadRat::zero(2)));
            for (row, &col) in perm.iter().enumerate() {
                let s = if signs >> row & 1 == 1 { -1 } else { 1 };
                m[row][col] = QuadRat::int(s, 2);
            }
            out.push(m);
        }
    }
    if with_eighth_turn {
        let h = QuadRat::from_parts(0, 1, 1, 2, 2).unwrap();
        let z = QuadRat::zero(2);
        let one = QuadRat::one(2);
        let turn = [
            [h.clone(), -h.clone(), z.clone()],
            [h.clone(), h.clone(), z.clone()],
            [z.clone(), z, one],
        ];
        let base = out.clone();
        for m in base {
            out.push(matmul(&turn, &m));
        }
    }
    out
}

fn matmul(a: &[[QuadRat; 3]; 3], b: &[[QuadRat; 3]; 3]) -> [[QuadRat; 3]; 3] {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(QuadRat::zero(2), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
        })
    })
}

fn apply(m: &[[QuadRat; 3]; 3], p: &Point3) -> Point3 {
    let c = [&p.x, &p.y, &p.z];
    let row = |i: usize| (0..3).fold(QuadRat::zero(2), |acc, k| &acc + &(&m[i][k] * c[k]));
    Point3::new(row(0), row(1), row(2)).unwrap()
}

/// Number of candidate matrices mapping the (origin-centred) polyhedron onto
/// itself, faces included. The polyhedron must be centred at the origin.
pub fn brute_symmetry_order(p: &Polyhedron, with_eighth_turn: bool) -> usize {
    let p = if p.d() == 2 { p.clone() } else { p.embed(2).unwrap() };
    let index: HashMap<&Point3, usize> = p.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
    let faces: HashSet<BTreeSet<usize>> = p.faces().iter().map(|f| f.iter().copied().collect()).collect();
    candidates(with_eighth_turn)
        .iter()
        .filter(|m| {
            let image: Option<Vec<usize>> = p
                .vertices()
                .iter()
                .map(|v| index.get(&apply(m, v)).copied())
                .collect();
            match image {
                None => false,
                Some(img) => p
                    .faces()
                    .iter()
                    .all(|f| faces.contains(&f.iter().map(|&i| img[i]).collect::<BTreeSet<_>>())),
            }
        })
        .count()
}

// --------------------------------------------------------- isomorphism ----

/// Vertex–face incidence graph; nodes carry 0 for vertices and 1 for faces.
/// For polyhedral (3-connected planar) surfaces, isomorphism of this graph
/// coincides with combinatorial isomorphism up to reflection.
pub fn incidence_graph(p: &Polyhedron) -> UnGraph<u8, ()> {
    let mut g = UnGraph::new_undirected();
    let vs: Vec<_> = (0..p.vertex_count()).map(|_| g.add_node(0u8)).collect();
    for f in p.faces() {
        let node = g.add_node(1u8);
        for &v in f {
            g.add_edge(vs[v], node, ());
        }
    }
    g
}

pub fn oracle_isomorphic(a: &Polyhedron, b: &Polyhedron) -> bool {
    let ga = incidence_graph(a);
    let gb = incidence_graph(b);
    petgraph::algo::is_isomorphic_matching(&ga, &gb, |x, y| x == y, |_, _| true)
}

// ------------------------------------------------------------- numerics ----

pub const REF_BITS: u64 = 256;

/// An interval `[lo, hi]` of width at most 2^-REF_BITS containing
/// `a + b√d`, computed with integer square roots only.
pub fn reference_interval(x: &QuadRat) -> (BigRational, BigRational) {
    let a = x.a().clone();
    if x.b().is_zero() {
        return (a.clone(), a);
    }
    // |b|√d = √(b²d) = √(p/q) = √(p·q·4^k) / (q·2^k)
    let b2d = x.b() * x.b() * BigRational::from_integer(BigInt::from(x.d()));
    let (p, q) = (b2d.numer().clone(), b2d.denom().clone());
    let big = (&p * &q) << (2 * REF_BITS);
    let s = big.sqrt();
    let den = &q << REF_BITS;
    let lo = BigRational::new(s.clone(), den.clone());
    let hi = if &s * &s == big { lo.clone() } else { BigRational::new(s + 1, den) };
    if x.b().is_negative() {
        (&a - &hi, &a - &lo)
    } else {
        (&a + &lo, &a + &hi)
    }
}

/// Sign of `x` from the reference interval. Panics if the interval
/// straddles zero (never for the magnitudes used in the tests).
pub fn reference_sign(x: &QuadRat) -> i32 {
    let (lo, hi) = reference_interval(x);
    if lo.is_positive() {
        1
    } else if hi.is_negative() {
        -1
    } else if lo.is_zero() && hi.is_zero() {
        0
    } else {
        panic!("reference interval straddles zero for {x}")
    }
}

/// Checks `got` is within one ulp of `x`.
pub fn within_one_ulp(x: &QuadRat, got: f64) -> bool {
    if !got.is_finite() {
        return false;
    }
    let (lo, hi) = reference_interval(x);
    let g = BigRational::from_float(got).unwrap();
    let ulp = BigRational::from_float(got.abs().next_up()).unwrap()
        - BigRational::from_float(got.abs()).unwrap();
    let err = std::cmp::max((&g - &lo).abs(), (&g - &hi).abs());
    err <= ulp
}
