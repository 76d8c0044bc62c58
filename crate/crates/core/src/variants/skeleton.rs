use num_rational::BigRational;
use num_traits::Signed;

use super::mesh::{MeshComponent, TriangleMesh};
use crate::error::{Error, Result};
use crate::exactfield::QuadRat;
use crate::polymodel::{require_valid, Polyhedron};

/// Frame geometry: the inner ring sits `inset` of the way from each face
/// vertex toward the face centroid; the frame is `thickness` deep along the
/// inward face normal.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameParams {
    inset: BigRational,
    thickness: f64,
}

impl FrameParams {
    pub fn new(inset: BigRational, thickness: f64) -> Result<Self> {
        let half = BigRational::new(1.into(), 2.into());
        if !inset.is_positive() || inset >= half {
            return Err(Error::Parameter(format!(
                "frame inset must lie in (0, 1/2), got {inset}"
            )));
        }
        if !(thickness.is_finite() && thickness > 0.0) {
            return Err(Error::Parameter(format!(
                "frame thickness must be positive, got {thickness}"
            )));
        }
        Ok(FrameParams { inset, thickness })
    }

    pub fn inset(&self) -> &BigRational {
        &self.inset
    }

    pub fn thickness(&self) -> f64 {
        self.thickness
    }
}

impl Default for FrameParams {
    /// Inset 1/4, thickness 0.1 (edge length of the RCO family is 2).
    fn default() -> Self {
        FrameParams {
            inset: BigRational::new(1.into(), 4.into()),
            thickness: 0.1,
        }
    }
}

/// One closed rectangular-section frame per face, in face order. Frames of
/// neighbouring faces overlap along shared edges; no union is taken.
pub fn skeleton(p: &Polyhedron, params: &FrameParams) -> Result<TriangleMesh> {
    require_valid(p)?;
    let inset = QuadRat::rational(params.inset.clone(), p.d())?;
    let components = (0..p.face_count())
        .map(|f| face_frame(p, f, &inset, params.thickness, format!("face_{f}")))
        .collect();
    Ok(TriangleMesh {
        label: "skeleton".into(),
        components,
    })
}

fn face_frame(p: &Polyhedron, f: usize, inset: &QuadRat, thickness: f64, name: String) -> MeshComponent {
    let outer = p.face_points(f);
    let c = p.face_centroid(f);
    let n = outer.len();
    let normal = p.newell_normal(f).to_f64();
    let len = (normal[0].powi(2) + normal[1].powi(2) + normal[2].powi(2)).sqrt();
    let down = normal.map(|x| -x / len * thickness);
    let shift = |v: [f64; 3]| [v[0] + down[0], v[1] + down[1], v[2] + down[2]];

    let outer_f: Vec<[f64; 3]> = outer.iter().map(|v| v.to_f64()).collect();
    let inner_f: Vec<[f64; 3]> = outer
        .iter()
        .map(|v| (v + &(&c - v).mul_scalar(inset)).to_f64())
        .collect();
    let mut vertices = Vec::with_capacity(4 * n);
    vertices.extend(outer_f.iter().copied());
    vertices.extend(inner_f.iter().copied());
    vertices.extend(outer_f.iter().map(|&v| shift(v)));
    vertices.extend(inner_f.iter().map(|&v| shift(v)));

    // Ring indices: outer top, inner top, outer bottom, inner bottom.
    let ot = |i: usize| i % n;
    let it = |i: usize| n + i % n;
    let ob = |i: usize| 2 * n + i % n;
    let ib = |i: usize| 3 * n + i % n;
    let mut triangles = Vec::with_capacity(8 * n);
    let mut quad = |a: usize, b: usize, c: usize, d: usize| {
        triangles.push([a, b, c]);
        triangles.push([a, c, d]);
    };
    for i in 0..n {
        let j = i + 1;
        quad(ot(i), ot(j), it(j), it(i));
        quad(ob(i), ib(i), ib(j), ob(j));
        quad(ot(i), ob(i), ob(j), ot(j));
        quad(it(i), it(j), ib(j), ib(i));
    }
    MeshComponent {
        name,
        vertices,
        triangles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{platonic, SolidName};

    fn frames(inset: (i64, i64), w: f64) -> Result<FrameParams> {
        FrameParams::new(BigRational::new(inset.0.into(), inset.1.into()), w)
    }

    #[test]
    fn square_frame_counts() {
        let cube = platonic(SolidName::Cube).unwrap();
        let m = skeleton(&cube, &frames((1, 4), 0.1).unwrap()).unwrap();
        assert_eq!(m.components.len(), 6);
        for c in &m.components {
            assert_eq!(c.vertices.len(), 16);
            assert_eq!(c.triangles.len(), 32);
            assert_eq!(c.euler_characteristic(), 0);
            assert!(c.is_closed_oriented());
            assert!(c.signed_volume() > 0.0);
        }
    }

    #[test]
    fn frame_volume_matches_annulus() {
        // Square of side 2; inset 1/4 leaves an inner square of side 3/2.
        // Annulus area 4 − 9/4 = 7/4, times depth 0.1.
        let cube = platonic(SolidName::Cube).unwrap();
        let m = skeleton(&cube, &frames((1, 4), 0.1).unwrap()).unwrap();
        assert!((m.components[0].signed_volume() - 0.175).abs() < 1e-12);
    }

    #[test]
    fn parameter_bounds() {
        assert!(frames((3, 5), 0.1).is_err());
        assert!(frames((1, 2), 0.1).is_err());
        assert!(frames((0, 1), 0.1).is_err());
        assert!(frames((1, 4), 0.0).is_err());
        assert!(frames((1, 4), f64::NAN).is_err());
    }
}
