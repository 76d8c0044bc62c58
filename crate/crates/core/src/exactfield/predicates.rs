use super::Point3;
use crate::error::{Error, Result};

/// Exact sign of `det[q − p, r − p, s − p]`.
///
/// Zero exactly when the four points are coplanar. Positive when `s` lies on
/// the side of plane `pqr` toward which `(q − p) × (r − p)` points.
pub fn orient3d(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> Result<i32> {
    let d = p.d();
    if [q, r, s].iter().any(|x| x.d() != d) {
        let other = [q, r, s].iter().map(|x| x.d()).find(|&x| x != d).unwrap_or(d);
        return Err(Error::FieldMix {
            left: d,
            right: other,
        });
    }
    let u = q - p;
    let v = r - p;
    let w = s - p;
    Ok(u.cross(&v).dot(&w).sign())
}

/// True when `a`, `b`, `c` lie on a common line.
pub fn collinear(a: &Point3, b: &Point3, c: &Point3) -> bool {
    (b - a).cross(&(c - a)).is_zero()
}
