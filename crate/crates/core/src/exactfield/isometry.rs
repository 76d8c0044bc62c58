use std::cmp::Ordering;
use std::fmt;

use super::{Point3, QuadRat};
use crate::error::{Error, Result};

/// A 3×3 matrix over a single Q(√d), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix3 {
    pub rows: [[QuadRat; 3]; 3],
}

impl Matrix3 {
    pub fn identity(d: u32) -> Self {
        let z = || QuadRat::zero(d);
        let o = || QuadRat::one(d);
        Matrix3 {
            rows: [[o(), z(), z()], [z(), o(), z()], [z(), z(), o()]],
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(c0: &Point3, c1: &Point3, c2: &Point3) -> Self {
        Matrix3 {
            rows: [
                [c0.x.clone(), c1.x.clone(), c2.x.clone()],
                [c0.y.clone(), c1.y.clone(), c2.y.clone()],
                [c0.z.clone(), c1.z.clone(), c2.z.clone()],
            ],
        }
    }

    pub fn d(&self) -> u32 {
        self.rows[0][0].d()
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadRat {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let r = &self.rows;
        Matrix3 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| r[j][i].clone())),
        }
    }

    pub fn mul(&self, other: &Matrix3) -> Matrix3 {
        let a = &self.rows;
        let b = &other.rows;
        Matrix3 {
            rows: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    &(&(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j])) + &(&a[i][2] * &b[2][j])
                })
            }),
        }
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        let r = &self.rows;
        let row = |i: usize| &(&(&r[i][0] * &p.x) + &(&r[i][1] * &p.y)) + &(&r[i][2] * &p.z);
        Point3 {
            x: row(0),
            y: row(1),
            z: row(2),
        }
    }

    pub fn det(&self) -> QuadRat {
        let r = &self.rows;
        let minor = |a: &QuadRat, b: &QuadRat, c: &QuadRat, d: &QuadRat| &(a * d) - &(b * c);
        let t0 = &r[0][0] * &minor(&r[1][1], &r[1][2], &r[2][1], &r[2][2]);
        let t1 = &r[0][1] * &minor(&r[1][0], &r[1][2], &r[2][0], &r[2][2]);
        let t2 = &r[0][2] * &minor(&r[1][0], &r[1][1], &r[2][0], &r[2][1]);
        &(&t0 - &t1) + &t2
    }

    /// Exact inverse via the adjugate.
    pub fn inverse(&self) -> Result<Matrix3> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::DegenerateInput("singular matrix".into()));
        }
        let inv_det = det.recip()?;
        let r = &self.rows;
        let cof = |i: usize, j: usize| {
            let rows: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let m = &(&r[rows[0]][cols[0]] * &r[rows[1]][cols[1]])
                - &(&r[rows[0]][cols[1]] * &r[rows[1]][cols[0]]);
            if (i + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        };
        // inverse[i][j] = cofactor[j][i] / det
        Ok(Matrix3 {
            rows: std::array::from_fn(|i| std::array::from_fn(|j| &cof(j, i) * &inv_det)),
        })
    }

    /// Entry-wise exact lexicographic order.
    pub fn lex_cmp(&self, other: &Matrix3) -> Ordering {
        for i in 0..3 {
            for j in 0..3 {
                let c = self.rows[i][j].cmp_same_field(&other.rows[i][j]);
                if c != Ordering::Equal {
                    return c;
                }
            }
        }
        Ordering::Equal
    }

    pub fn to_f64(&self) -> [[f64; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.rows[i][j].to_f64()))
    }
}

impl fmt::Debug for Matrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}

/// An exact orthogonal map (rotation or rotation-reflection).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Isometry {
    m: Matrix3,
}

impl Isometry {
    /// Accepts `m` only if `mᵀ·m` is exactly the identity.
    pub fn new(m: Matrix3) -> Result<Self> {
        if m.transpose().mul(&m) != Matrix3::identity(m.d()) {
            return Err(Error::Domain("matrix is not orthogonal".into()));
        }
        Ok(Isometry { m })
    }

    pub fn identity(d: u32) -> Self {
        Isometry {
            m: Matrix3::identity(d),
        }
    }

    pub fn matrix(&self) -> &Matrix3 {
        &self.m
    }

    pub fn apply(&self, p: &Point3) -> Point3 {
        self.m.apply(p)
    }

    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            m: self.m.mul(&other.m),
        }
    }

    pub fn inverse(&self) -> Isometry {
        Isometry {
            m: self.m.transpose(),
        }
    }

    /// +1 for rotations, −1 for improper isometries.
    pub fn determinant(&self) -> i32 {
        self.m.det().sign()
    }

    pub fn is_rotation(&self) -> bool {
        self.determinant() > 0
    }

    /// Rotation by 45° counter-clockwise about a coordinate axis, over Q(√2).
    pub fn eighth_turn(axis: Axis) -> Isometry {
        let c = QuadRat::from_parts(0, 1, 1, 2, 2).expect("radicand 2");
        let s = c.clone();
        let o = QuadRat::one(2);
        let z = QuadRat::zero(2);
        let rows = match axis {
            Axis::Z => [
                [c.clone(), -&s, z.clone()],
                [s.clone(), c.clone(), z.clone()],
                [z.clone(), z.clone(), o],
            ],
            Axis::X => [
                [o, z.clone(), z.clone()],
                [z.clone(), c.clone(), -&s],
                [z.clone(), s.clone(), c.clone()],
            ],
            Axis::Y => [
                [c.clone(), z.clone(), s.clone()],
                [z.clone(), o, z.clone()],
                [-&s, z.clone(), c.clone()],
            ],
        };
        Isometry {
            m: Matrix3 { rows },
        }
    }
}

impl fmt::Debug for Isometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Isometry{:?}", self.m)
    }
}

/// Coordinate axis selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub fn coord<'a>(&self, p: &'a Point3) -> &'a QuadRat {
        match self {
            Axis::X => &p.x,
            Axis::Y => &p.y,
            Axis::Z => &p.z,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eighth_turn_is_orthogonal() {
        for axis in [Axis::X, Axis::Y, Axis::Z] {
            let r = Isometry::eighth_turn(axis);
            assert!(Isometry::new(r.matrix().clone()).is_ok());
            assert_eq!(r.determinant(), 1);
            let r8 = (0..8).fold(Isometry::identity(2), |acc, _| acc.compose(&r));
            assert_eq!(r8, Isometry::identity(2));
        }
    }

    #[test]
    fn eighth_turn_moves_cap_vertex() {
        let r = Isometry::eighth_turn(Axis::Z);
        let h = QuadRat::from_parts(1, 1, 1, 1, 2).unwrap();
        let p = Point3::new(QuadRat::one(2), QuadRat::one(2), h.clone()).unwrap();
        let expected = Point3::new(QuadRat::zero(2), QuadRat::sqrt_d(2).unwrap(), h).unwrap();
        assert_eq!(r.apply(&p), expected);
    }

    #[test]
    fn non_orthogonal_rejected() {
        let mut m = Matrix3::identity(1);
        m.rows[0][1] = QuadRat::one(1);
        assert!(Isometry::new(m).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix3 {
            rows: [
                [QuadRat::int(2, 2), QuadRat::one(2), QuadRat::zero(2)],
                [QuadRat::zero(2), QuadRat::sqrt_d(2).unwrap(), QuadRat::int(3, 2)],
                [QuadRat::one(2), QuadRat::zero(2), QuadRat::int(-1, 2)],
            ],
        };
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix3::identity(2));
    }
}
