use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::AnalysisError;
use crate::exact::AngleMode;
use crate::model::{Tiling, VertexLocation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexType {
    Simple,
    Star,
    Center,
    DoubleStar,
    GammaStar,
    DoubleSimple,
    Other,
}

impl VertexType {
    pub const TABLE: [(VertexType, [usize; 3]); 6] = [
        (VertexType::Simple, [1, 1, 1]),
        (VertexType::Star, [3, 3, 0]),
        (VertexType::Center, [0, 0, 3]),
        (VertexType::DoubleStar, [6, 6, 0]),
        (VertexType::GammaStar, [4, 4, 1]),
        (VertexType::DoubleSimple, [2, 2, 2]),
    ];

    pub fn from_counts(counts: [usize; 3]) -> VertexType {
        VertexType::TABLE.iter().find(|(_, c)| *c == counts).map(|(t, _)| *t).unwrap_or(VertexType::Other)
    }

    /// `#(α) + #(β) − 2#(γ)` for the type; `None` for `Other`.
    pub fn contribution(self) -> Option<i64> {
        VertexType::TABLE.iter().find(|(t, _)| *t == self).map(|(_, c)| contribution(*c))
    }
}

pub fn contribution(counts: [usize; 3]) -> i64 {
    counts[0] as i64 + counts[1] as i64 - 2 * counts[2] as i64
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VertexCensus {
    pub simple: usize,
    pub star: usize,
    pub center: usize,
    pub double_star: usize,
    pub gamma_star: usize,
    pub double_simple: usize,
    pub other: usize,
    /// Total `#(α) + #(β) − 2#(γ)` over vertices of type `Other`.
    pub other_contrib: i64,
    pub corners: usize,
    /// Total `#(α) + #(β) − 2#(γ)` over region corners and open vertices of a patch.
    pub corner_contrib: i64,
    pub open: usize,
    pub n_alpha: usize,
    pub n_beta: usize,
    pub n_gamma: usize,
    /// Stars plus γ-stars.
    pub s: usize,
    /// Double stars.
    pub s2: usize,
    /// Centers.
    pub c: usize,
    pub types: BTreeMap<usize, VertexType>,
}

/// Assigns a vertex type to every vertex that is neither a region corner nor an open
/// vertex of a patch.
pub fn classify_vertices(t: &Tiling) -> Result<VertexCensus, AnalysisError> {
    let mut cen = VertexCensus::default();
    for v in &t.vertices {
        let counts = v.counts();
        cen.n_alpha += counts[0];
        cen.n_beta += counts[1];
        cen.n_gamma += counts[2];
        match v.location {
            VertexLocation::Corner | VertexLocation::Open => {
                if v.location == VertexLocation::Corner {
                    cen.corners += 1;
                } else {
                    cen.open += 1;
                }
                cen.corner_contrib += contribution(counts);
                continue;
            }
            _ => {}
        }
        let ty = VertexType::from_counts(counts);
        if ty == VertexType::Other && t.spec.angle_mode() == AngleMode::Incommensurable {
            return Err(AnalysisError::Classification { vertex: v.id, counts });
        }
        match ty {
            VertexType::Simple => cen.simple += 1,
            VertexType::Star => cen.star += 1,
            VertexType::Center => cen.center += 1,
            VertexType::DoubleStar => cen.double_star += 1,
            VertexType::GammaStar => cen.gamma_star += 1,
            VertexType::DoubleSimple => cen.double_simple += 1,
            VertexType::Other => {
                cen.other += 1;
                cen.other_contrib += contribution(counts);
            }
        }
        cen.types.insert(v.id, ty);
    }
    cen.s = cen.star + cen.gamma_star;
    cen.s2 = cen.double_star;
    cen.c = cen.center;
    Ok(cen)
}

/// Sum of `#(α) + #(β) − 2#(γ)` over all classified vertices plus `corner_contrib`.
/// Every tile contributes `1 + 1 − 2 = 0`, so this is zero for any tiling.
pub fn census_identity_check(cen: &VertexCensus, corner_contrib: i64) -> i64 {
    let typed: i64 = [
        (VertexType::Simple, cen.simple),
        (VertexType::Star, cen.star),
        (VertexType::Center, cen.center),
        (VertexType::DoubleStar, cen.double_star),
        (VertexType::GammaStar, cen.gamma_star),
        (VertexType::DoubleSimple, cen.double_simple),
    ]
    .iter()
    .map(|(ty, n)| ty.contribution().unwrap() * *n as i64)
    .sum();
    typed + cen.other_contrib + corner_contrib
}
