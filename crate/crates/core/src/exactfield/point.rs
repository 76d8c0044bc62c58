use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;

use super::QuadRat;
use crate::error::{Error, Result};

/// A point (or vector) in 3-space with coordinates in a single Q(√d).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: QuadRat,
    pub y: QuadRat,
    pub z: QuadRat,
}

impl Point3 {
    pub fn new(x: QuadRat, y: QuadRat, z: QuadRat) -> Result<Self> {
        if x.d() != y.d() || x.d() != z.d() {
            let right = if x.d() != y.d() { y.d() } else { z.d() };
            return Err(Error::FieldMix {
                left: x.d(),
                right,
            });
        }
        Ok(Point3 { x, y, z })
    }

    /// Integer point in Q(√d).
    pub fn ints(x: i64, y: i64, z: i64, d: u32) -> Self {
        Point3 {
            x: QuadRat::int(x, d),
            y: QuadRat::int(y, d),
            z: QuadRat::int(z, d),
        }
    }

    pub fn origin(d: u32) -> Self {
        Self::ints(0, 0, 0, d)
    }

    pub fn d(&self) -> u32 {
        self.x.d()
    }

    pub fn coords(&self) -> [&QuadRat; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn from_array([x, y, z]: [QuadRat; 3]) -> Result<Self> {
        Self::new(x, y, z)
    }

    pub fn embed(&self, d: u32) -> Result<Self> {
        Ok(Point3 {
            x: self.x.embed(d)?,
            y: self.y.embed(d)?,
            z: self.z.embed(d)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Point3 {
            x: self.x.try_sub(&other.x)?,
            y: self.y.try_sub(&other.y)?,
            z: self.z.try_sub(&other.z)?,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Point3 {
            x: self.x.try_add(&other.x)?,
            y: self.y.try_add(&other.y)?,
            z: self.z.try_add(&other.z)?,
        })
    }

    pub fn mul_scalar(&self, s: &QuadRat) -> Self {
        Point3 {
            x: &self.x * s,
            y: &self.y * s,
            z: &self.z * s,
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Point3 {
            x: self.x.scale(r),
            y: self.y.scale(r),
            z: self.z.scale(r),
        }
    }

    pub fn dot(&self, other: &Self) -> QuadRat {
        &(&self.x * &other.x) + &(&self.y * &other.y) + &self.z * &other.z
    }

    pub fn cross(&self, other: &Self) -> Self {
        Point3 {
            x: &(&self.y * &other.z) - &(&self.z * &other.y),
            y: &(&self.z * &other.x) - &(&self.x * &other.z),
            z: &(&self.x * &other.y) - &(&self.y * &other.x),
        }
    }

    pub fn norm2(&self) -> QuadRat {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Lexicographic (x, y, z) order under exact comparison.
    ///
    /// # Panics
    /// On field mix.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.x
            .cmp_same_field(&other.x)
            .then_with(|| self.y.cmp_same_field(&other.y))
            .then_with(|| self.z.cmp_same_field(&other.z))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [self.x.to_f64(), self.y.to_f64(), self.z.to_f64()]
    }

    /// Arithmetic mean of a non-empty point list.
    pub fn centroid(points: &[Point3]) -> Option<Point3> {
        let first = points.first()?;
        let mut sum = Point3::origin(first.d());
        for p in points {
            sum = &sum + p;
        }
        let n = BigRational::new(1.into(), (points.len() as i64).into());
        Some(sum.scale(&n))
    }
}

impl Add<&Point3> for &Point3 {
    type Output = Point3;
    fn add(self, rhs: &Point3) -> Point3 {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Point3> for &Point3 {
    type Output = Point3;
    fn sub(self, rhs: &Point3) -> Point3 {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3 {
            x: -&self.x,
            y: -&self.y,
            z: -&self.z,
        }
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

impl fmt::Debug for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point3{self}")
    }
}
