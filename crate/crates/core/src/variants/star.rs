use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactfield::QuadRat;
use crate::polymodel::{require_valid, Polyhedron};

/// Pyramid heights: the apex over an n-gon face is `centroid + t_n · N`, with
/// `N` the face's unnormalized Newell normal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarParams {
    pub heights: BTreeMap<usize, BigRational>,
}

impl StarParams {
    pub fn new(heights: BTreeMap<usize, BigRational>) -> Self {
        StarParams { heights }
    }

    /// One height for every face size of `p`.
    pub fn uniform(p: &Polyhedron, t: BigRational) -> Self {
        let heights = p.faces().iter().map(|f| (f.len(), t.clone())).collect();
        StarParams { heights }
    }

    /// Heights giving (approximately) equilateral lateral triangles, rounded
    /// to six decimals. Faces with six or more sides cannot carry equilateral
    /// pyramids and get a height of half their edge length instead.
    ///
    /// Measured on the first face of each size.
    pub fn equilateral(p: &Polyhedron) -> Self {
        let mut heights = BTreeMap::new();
        for (fi, f) in p.faces().iter().enumerate() {
            let n = f.len();
            if heights.contains_key(&n) {
                continue;
            }
            let a = p.vertices()[f[0]].to_f64();
            let b = p.vertices()[f[1]].to_f64();
            let edge = ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
            let circumradius = edge / (2.0 * (PI / n as f64).sin());
            let height = if circumradius < edge {
                (edge * edge - circumradius * circumradius).sqrt()
            } else {
                edge / 2.0
            };
            let normal = p.newell_normal(fi).to_f64();
            let len = (normal[0].powi(2) + normal[1].powi(2) + normal[2].powi(2)).sqrt();
            let t = (height / len * 1e6).round() as i64;
            heights.insert(n, BigRational::new(t.into(), 1_000_000.into()));
        }
        StarParams { heights }
    }

    /// Parses `n=t` where `t` is a fraction (`1/4`) or a decimal (`0.25`).
    pub fn parse_entry(s: &str) -> Result<(usize, BigRational)> {
        let (n, t) = s
            .split_once('=')
            .ok_or_else(|| Error::Parameter(format!("height '{s}' is not of the form n=t")))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("bad face size in '{s}'")))?;
        Ok((n, parse_rational(t.trim())?))
    }
}

/// Parses `p/q`, an integer, or a finite decimal into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parameter(format!("'{s}' is not a rational number"));
    if let Some((n, d)) = s.split_once('/') {
        let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty())
        || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits: num_bigint::BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = num_bigint::BigInt::from(10u32).pow(frac.len() as u32);
    let r = BigRational::new(digits, scale);
    Ok(if neg { -r } else { r })
}

/// Replaces every face by a pyramid. Base vertices keep their indices; apex
/// `k` (over face `k`) gets index `V + k`.
pub fn star(p: &Polyhedron, params: &StarParams) -> Result<Polyhedron> {
    require_valid(p)?;
    let mut vertices = p.vertices().to_vec();
    let mut faces = Vec::new();
    for (fi, f) in p.faces().iter().enumerate() {
        let n = f.len();
        let t = params
            .heights
            .get(&n)
            .ok_or_else(|| Error::Parameter(format!("no pyramid height for {n}-gon faces")))?;
        if t.is_zero() {
            return Err(Error::DegenerateApex(n));
        }
        if t.is_negative() {
            return Err(Error::Parameter(format!(
                "pyramid height for {n}-gon faces must be positive, got {t}"
            )));
        }
        let t = QuadRat::rational(t.clone(), p.d())?;
        let apex = &p.face_centroid(fi) + &p.newell_normal(fi).mul_scalar(&t);
        let a = vertices.len();
        vertices.push(apex);
        for i in 0..n {
            faces.push(vec![f[i], f[(i + 1) % n], a]);
        }
    }
    Polyhedron::new(vertices, faces, false)
}

/// Float height of the apex above each face size's first face, for reports.
pub fn apex_heights(p: &Polyhedron, params: &StarParams) -> BTreeMap<usize, f64> {
    let mut out = BTreeMap::new();
    for (fi, f) in p.faces().iter().enumerate() {
        let n = f.len();
        if out.contains_key(&n) {
            continue;
        }
        if let Some(t) = params.heights.get(&n) {
            let normal = p.newell_normal(fi).norm2().to_f64().sqrt();
            out.insert(n, t.to_f64().unwrap_or(f64::NAN) * normal);
        }
    }
    out
}
