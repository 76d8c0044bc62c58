//! Lossless JSON documents for exact polyhedra.
//!
//! ```json
//! {
//!   "schema_version": "1.0",
//!   "radicand": 2,
//!   "vertices": [[{"a": [1, 1], "b": [0, 1]}, ...], ...],
//!   "faces": [[0, 1, 2], ...],
//!   "metadata": {"convex": true, "name": "rco"}
//! }
//! ```
//!
//! Each coordinate is `a + b·√radicand` with `a`, `b` given as
//! `[numerator, denominator]` integer pairs of arbitrary size.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};

use crate::error::{Error, Result};
use crate::exactfield::{Point3, QuadRat, RADICANDS};
use crate::polymodel::{validate, Polyhedron};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub a: [Number; 2],
    pub b: [Number; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactDocument {
    pub schema_version: String,
    pub radicand: i64,
    pub vertices: Vec<[Component; 3]>,
    pub faces: Vec<Vec<usize>>,
    #[serde(default)]
    pub metadata: Map<String, Value>,
}

fn number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn rational_pair(r: &BigRational) -> [Number; 2] {
    [number(r.numer()), number(r.denom())]
}

fn component(q: &QuadRat) -> Component {
    Component {
        a: rational_pair(q.a()),
        b: rational_pair(q.b()),
    }
}

impl ExactDocument {
    /// Document for `p`; `metadata` is extended with the `convex` flag.
    pub fn from_polyhedron(p: &Polyhedron, mut metadata: Map<String, Value>) -> Self {
        metadata.insert("convex".into(), Value::Bool(p.is_convex()));
        ExactDocument {
            schema_version: SCHEMA_VERSION.into(),
            radicand: i64::from(p.d()),
            vertices: p
                .vertices()
                .iter()
                .map(|v| [component(&v.x), component(&v.y), component(&v.z)])
                .collect(),
            faces: p.faces().to_vec(),
            metadata,
        }
    }

    /// Rebuilds and re-validates the polyhedron.
    pub fn to_polyhedron(&self) -> Result<Polyhedron> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::decode(
                "schema_version",
                format!("unknown schema_version '{}'", self.schema_version),
            ));
        }
        let d = u32::try_from(self.radicand)
            .ok()
            .filter(|d| RADICANDS.contains(d))
            .ok_or_else(|| {
                Error::decode(
                    "radicand",
                    format!("unsupported radicand {}", self.radicand),
                )
            })?;
        if self.vertices.is_empty() {
            return Err(Error::decode("vertices", "no vertices"));
        }
        let mut vertices = Vec::with_capacity(self.vertices.len());
        for (i, coords) in self.vertices.iter().enumerate() {
            let mut xyz = Vec::with_capacity(3);
            for (axis, c) in ["x", "y", "z"].iter().zip(coords) {
                let loc = format!("vertices[{i}].{axis}");
                let a = parse_rational(&c.a, &format!("{loc}.a"))?;
                let b = parse_rational(&c.b, &format!("{loc}.b"))?;
                xyz.push(QuadRat::new(a, b, d).map_err(|e| Error::decode(&loc, e.to_string()))?);
            }
            let [x, y, z]: [QuadRat; 3] = xyz.try_into().expect("three coordinates");
            vertices.push(Point3::new(x, y, z).map_err(|e| Error::decode(format!("vertices[{i}]"), e.to_string()))?);
        }
        for (fi, f) in self.faces.iter().enumerate() {
            if let Some((j, &bad)) = f.iter().enumerate().find(|(_, &v)| v >= vertices.len()) {
                return Err(Error::decode(
                    format!("faces[{fi}][{j}]"),
                    format!(
                        "vertex index {bad} out of range ({} vertices)",
                        vertices.len()
                    ),
                ));
            }
        }
        let convex = match self.metadata.get("convex") {
            None => false,
            Some(Value::Bool(b)) => *b,
            Some(_) => {
                return Err(Error::decode("metadata.convex", "expected a boolean"));
            }
        };
        let p = Polyhedron::new(vertices, self.faces.clone(), convex)?;
        let report = validate(&p);
        if !report.is_valid() {
            return Err(Error::decode("faces", report.defects.join("; ")));
        }
        Ok(p)
    }
}

fn parse_rational(pair: &[Number; 2], loc: &str) -> Result<BigRational> {
    let int = |n: &Number, which: &str| {
        BigInt::from_str(&n.to_string())
            .map_err(|_| Error::decode(format!("{loc}[{which}]"), format!("'{n}' is not an integer")))
    };
    let num = int(&pair[0], "0")?;
    let den = int(&pair[1], "1")?;
    if den.is_zero() {
        return Err(Error::decode(format!("{loc}[1]"), "zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// Pretty-printed JSON for a valid polyhedron.
pub fn encode(p: &Polyhedron) -> Result<Vec<u8>> {
    encode_with_metadata(p, Map::new())
}

pub fn encode_with_metadata(p: &Polyhedron, metadata: Map<String, Value>) -> Result<Vec<u8>> {
    crate::polymodel::require_valid(p)?;
    let doc = ExactDocument::from_polyhedron(p, metadata);
    let mut out = serde_json::to_vec_pretty(&doc).expect("document serializes");
    out.push(b'\n');
    Ok(out)
}

/// Parses and validates a document.
pub fn decode(bytes: &[u8]) -> Result<Polyhedron> {
    decode_document(bytes)?.to_polyhedron()
}

pub fn decode_document(bytes: &[u8]) -> Result<ExactDocument> {
    serde_json::from_slice(bytes).map_err(|e| {
        Error::decode(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{platonic, rco, SolidName};

    fn doc_value(p: &Polyhedron) -> Value {
        serde_json::from_slice(&encode(p).unwrap()).unwrap()
    }

    fn decode_value(v: &Value) -> Result<Polyhedron> {
        decode(&serde_json::to_vec(v).unwrap())
    }

    #[test]
    fn rco_roundtrip() {
        let p = rco().unwrap();
        assert_eq!(decode(&encode(&p).unwrap()).unwrap(), p);
    }

    #[test]
    fn radicand_three_rejected() {
        let mut v = doc_value(&rco().unwrap());
        v["radicand"] = 3.into();
        let err = decode_value(&v).unwrap_err();
        assert!(err.to_string().contains("unsupported radicand"), "{err}");
    }

    #[test]
    fn out_of_range_face_index() {
        let mut v = doc_value(&rco().unwrap());
        v["faces"][0][0] = 99.into();
        let err = decode_value(&v).unwrap_err();
        match err {
            Error::Decode { location, message } => {
                assert_eq!(location, "faces[0][0]");
                assert!(message.contains("99"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_schema_and_malformed_json() {
        let mut v = doc_value(&platonic(SolidName::Cube).unwrap());
        v["schema_version"] = "9".into();
        assert!(matches!(decode_value(&v), Err(Error::Decode { .. })));
        let err = decode(b"{\"schema_version\": ").unwrap_err();
        assert!(matches!(err, Error::Decode { ref location, .. } if location.starts_with("line 1")));
    }

    #[test]
    fn defective_document_rejected() {
        let mut v = doc_value(&platonic(SolidName::Cube).unwrap());
        v["faces"].as_array_mut().unwrap().pop();
        assert!(matches!(decode_value(&v), Err(Error::Decode { .. })));
    }

    #[test]
    fn zero_denominator_and_fractional_numbers() {
        let mut v = doc_value(&platonic(SolidName::Cube).unwrap());
        v["vertices"][0][0]["a"][1] = 0.into();
        assert!(decode_value(&v).is_err());
        let mut v = doc_value(&platonic(SolidName::Cube).unwrap());
        v["vertices"][0][0]["a"][0] = serde_json::json!(0.5);
        assert!(decode_value(&v).is_err());
    }

    #[test]
    fn huge_integers_survive() {
        let big = BigRational::new(BigInt::from(10).pow(40) + 1u32, BigInt::from(3));
        let p = platonic(SolidName::Cube).unwrap().scaled(&big);
        assert_eq!(decode(&encode(&p).unwrap()).unwrap(), p);
    }
}
