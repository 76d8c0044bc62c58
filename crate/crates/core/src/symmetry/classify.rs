use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::group::{similarity_search, SimilarityMatch};
use super::symmetry_group;
use crate::error::Result;
use crate::polymodel::{face_census, require_valid, Polyhedron};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolidKind {
    #[serde(rename = "RCO")]
    Rco,
    #[serde(rename = "PseudoRCO")]
    PseudoRco,
    Other,
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolidKind::Rco => "RCO",
            SolidKind::PseudoRco => "PseudoRCO",
            SolidKind::Other => "Other",
        })
    }
}

/// The facts a classification rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub census: BTreeMap<usize, usize>,
    pub vertex_count: usize,
    pub symmetry_order: usize,
    pub vertex_transitive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolidTag {
    pub kind: SolidKind,
    pub evidence: Evidence,
}

/// RCO: 8 triangles, 18 squares, 24 vertices, symmetry order 48.
/// Pseudo-RCO: same inventory with symmetry order 16.
pub fn classify(p: &Polyhedron) -> Result<SolidTag> {
    let census = face_census(p)?;
    let sym = symmetry_group(p)?;
    let inventory = census.counts == BTreeMap::from([(3, 8), (4, 18)]) && p.vertex_count() == 24;
    let kind = match (inventory, sym.order) {
        (true, 48) => SolidKind::Rco,
        (true, 16) => SolidKind::PseudoRco,
        _ => SolidKind::Other,
    };
    Ok(SolidTag {
        kind,
        evidence: Evidence {
            census: census.counts,
            vertex_count: p.vertex_count(),
            symmetry_order: sym.order,
            vertex_transitive: sym.vertex_transitive,
        },
    })
}

/// Finds a similarity (isometry composed with uniform scaling, about the
/// vertex centroids) carrying `a` onto `b`, faces included.
///
/// Solids over different irrational fields are reported as not similar;
/// a rational solid is lifted into the other's field first.
pub fn congruent_up_to_scale(a: &Polyhedron, b: &Polyhedron) -> Result<Option<SimilarityMatch>> {
    require_valid(a)?;
    require_valid(b)?;
    let (a, b) = match (a.d(), b.d()) {
        (x, y) if x == y => (a.clone(), b.clone()),
        (1, y) => (a.embed(y)?, b.clone()),
        (x, 1) => (a.clone(), b.embed(x)?),
        _ => return Ok(None),
    };
    if a.vertex_count() != b.vertex_count() {
        return Ok(None);
    }
    let max_norm = |p: &Polyhedron| {
        let c = p.centroid();
        p.vertices()
            .iter()
            .map(|v| (v - &c).norm2())
            .max_by(|x, y| x.cmp_same_field(y))
            .expect("non-empty")
    };
    let mu = &max_norm(&b) / &max_norm(&a);
    Ok(similarity_search(&a, &b, &mu, true)?.into_iter().next())
}
