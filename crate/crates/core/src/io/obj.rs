//! Wavefront OBJ export. Output bytes depend only on the input and the
//! requested precision.

use std::fmt::Write;

use super::decimal::{format_f64, format_significant};
use crate::error::{Error, Result};
use crate::polymodel::Polyhedron;
use crate::variants::TriangleMesh;

pub const MIN_PRECISION: usize = 6;
pub const MAX_PRECISION: usize = 17;

/// Anything that can be written as OBJ records.
pub trait ToObj {
    fn write_obj(&self, precision: usize, out: &mut String);
}

/// OBJ bytes with coordinates at `precision` significant digits (6..=17).
pub fn to_obj<T: ToObj + ?Sized>(item: &T, precision: usize) -> Result<Vec<u8>> {
    if !(MIN_PRECISION..=MAX_PRECISION).contains(&precision) {
        return Err(Error::Parameter(format!(
            "precision must be between {MIN_PRECISION} and {MAX_PRECISION}, got {precision}"
        )));
    }
    let mut out = String::new();
    item.write_obj(precision, &mut out);
    Ok(out.into_bytes())
}

impl ToObj for Polyhedron {
    /// Exact coordinates, correctly rounded; n-gon faces kept whole.
    fn write_obj(&self, precision: usize, out: &mut String) {
        for v in self.vertices() {
            let [x, y, z] = v.coords().map(|c| format_significant(c, precision));
            let _ = writeln!(out, "v {x} {y} {z}");
        }
        for f in self.faces() {
            write_face(out, f.iter().map(|&i| i + 1));
        }
    }
}

impl ToObj for TriangleMesh {
    /// All vertices first, then one `g` group of triangles per component.
    fn write_obj(&self, precision: usize, out: &mut String) {
        for c in &self.components {
            for v in &c.vertices {
                let [x, y, z] = v.map(|x| format_f64(x, precision));
                let _ = writeln!(out, "v {x} {y} {z}");
            }
        }
        let mut offset = 1;
        for c in &self.components {
            let _ = writeln!(out, "g {}", c.name);
            for t in &c.triangles {
                write_face(out, t.iter().map(|&i| i + offset));
            }
            offset += c.vertices.len();
        }
    }
}

fn write_face(out: &mut String, indices: impl Iterator<Item = usize>) {
    out.push('f');
    for i in indices {
        let _ = write!(out, " {i}");
    }
    out.push('\n');
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{platonic, rco, SolidName};

    #[test]
    fn cube_records() {
        let cube = platonic(SolidName::Cube).unwrap();
        let text = String::from_utf8(to_obj(&cube, 9).unwrap()).unwrap();
        let v = text.lines().filter(|l| l.starts_with("v ")).count();
        let f: Vec<&str> = text.lines().filter(|l| l.starts_with("f ")).collect();
        assert_eq!(v, 8);
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|l| l.split_whitespace().count() == 5));
        assert!(text.starts_with("v -1 -1 -1\n"));
    }

    #[test]
    fn rco_vertex_line() {
        let text = String::from_utf8(to_obj(&rco().unwrap(), 15).unwrap()).unwrap();
        assert!(text.lines().any(|l| l == "v 1 1 2.41421356237310"));
    }

    #[test]
    fn precision_range() {
        let cube = platonic(SolidName::Cube).unwrap();
        assert!(matches!(to_obj(&cube, 5), Err(Error::Parameter(_))));
        assert!(matches!(to_obj(&cube, 18), Err(Error::Parameter(_))));
        assert!(to_obj(&cube, 6).is_ok() && to_obj(&cube, 17).is_ok());
    }
}
