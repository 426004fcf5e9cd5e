use std::f64::consts::PI;

use serde::Serialize;

use super::relations::Ratios;
use crate::exact::{AngleMode, EdgeLabel};
use crate::model::{boundary_walk, Tiling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    CommensurableSidesForced,
    ExceptionalCaseEquilateral,
    #[serde(rename = "exceptional_case_2a_2b_pi3")]
    ExceptionalCase2a2bPi3,
    InconsistentTiling,
    Undetermined,
    /// The region is not a triangle, or it is similar to the tile.
    NotApplicable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerPattern {
    Equilateral,
    /// Corner angles π/3, 2α, 2β in some order.
    TwoAlphaTwoBetaPi3,
    SimilarToTile,
    Other,
    NotATriangle,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryProfile {
    /// Every edge on the region boundary is a c-edge.
    pub all_c: bool,
    /// Number of boundary c-edges on each side, walking counterclockwise from the
    /// lowest-then-leftmost corner.
    pub c_counts: Vec<usize>,
    pub corner_pattern: CornerPattern,
}

pub fn corner_pattern(t: &Tiling) -> CornerPattern {
    let Some(region) = &t.region else { return CornerPattern::NotATriangle };
    if region.len() != 3 {
        return CornerPattern::NotATriangle;
    }
    let mut angles: Vec<f64> = (0..3)
        .map(|i| {
            let p = region.points[i];
            let (v1, v2) = (region.points[(i + 1) % 3] - p, region.points[(i + 2) % 3] - p);
            v1.cross(v2).atan2(v1.dot(v2)).abs()
        })
        .collect();
    angles.sort_by(f64::total_cmp);
    let same = |mut want: Vec<f64>| {
        want.sort_by(f64::total_cmp);
        want.iter().zip(&angles).all(|(x, y)| (x - y).abs() <= 1e-7)
    };
    let (al, be) = (t.spec.alpha(), t.spec.beta());
    if same(vec![PI / 3.0; 3]) {
        CornerPattern::Equilateral
    } else if same(vec![al, be, t.spec.gamma()]) {
        CornerPattern::SimilarToTile
    } else if same(vec![PI / 3.0, 2.0 * al, 2.0 * be]) {
        CornerPattern::TwoAlphaTwoBetaPi3
    } else {
        CornerPattern::Other
    }
}

pub fn boundary_profile(t: &Tiling) -> BoundaryProfile {
    let corner_pattern = corner_pattern(t);
    match boundary_walk(t) {
        Ok(walk) => {
            let all_c = walk.iter().all(|s| s.sym.is_some() && s.fragments.iter().all(|&f| t.fragments[f].label == EdgeLabel::C));
            let c_counts = walk.iter().map(|s| s.fragments.iter().filter(|&&f| t.fragments[f].label == EdgeLabel::C).count()).collect();
            BoundaryProfile { all_c, c_counts, corner_pattern }
        }
        Err(_) => BoundaryProfile { all_c: false, c_counts: Vec::new(), corner_pattern },
    }
}

/// Everything the conclusion depends on, gathered from the individual analyses.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictInputs {
    pub angle_mode: AngleMode,
    pub corner_pattern: CornerPattern,
    pub boundary_all_c: bool,
    /// `Err` when the relations admit no positive solution.
    pub ratios: Result<Ratios, String>,
    pub impossible_segments: usize,
    pub census_identity: i64,
    pub other_vertices: usize,
    pub audit_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub reasons: Vec<String>,
}

pub fn conclude(inp: &VerdictInputs) -> Verdict {
    let mut reasons = Vec::new();
    if inp.audit_failures > 0 {
        reasons.push(format!("{} extension-lemma audit(s) failed", inp.audit_failures));
    }
    if inp.census_identity != 0 {
        reasons.push(format!("census identity evaluates to {}", inp.census_identity));
    }
    if inp.impossible_segments > 0 {
        reasons.push(format!("{} segment(s) with side sums no positive lengths can balance", inp.impossible_segments));
    }
    if let Err(e) = &inp.ratios {
        reasons.push(e.clone());
    }
    if inp.census_identity != 0 || inp.impossible_segments > 0 || inp.ratios.is_err() {
        return Verdict { conclusion: Conclusion::InconsistentTiling, reasons };
    }
    match inp.corner_pattern {
        CornerPattern::NotATriangle => {
            reasons.push("region is not a triangle".into());
            return Verdict { conclusion: Conclusion::NotApplicable, reasons };
        }
        CornerPattern::SimilarToTile => {
            reasons.push("region is similar to the tile".into());
            return Verdict { conclusion: Conclusion::NotApplicable, reasons };
        }
        _ => {}
    }
    let ratios = inp.ratios.as_ref().unwrap();
    if let (Some(ab), Some(cb)) = (&ratios.a_over_b, &ratios.c_over_b) {
        reasons.push(format!("relations force a/b = {ab} and c/b = {cb}"));
        return Verdict { conclusion: Conclusion::CommensurableSidesForced, reasons };
    }
    if inp.boundary_all_c {
        match inp.corner_pattern {
            CornerPattern::Equilateral => {
                reasons.push("all boundary edges are c-edges and the region is equilateral".into());
                return Verdict { conclusion: Conclusion::ExceptionalCaseEquilateral, reasons };
            }
            CornerPattern::TwoAlphaTwoBetaPi3 => {
                reasons.push("all boundary edges are c-edges and the corners are π/3, 2α, 2β".into());
                return Verdict { conclusion: Conclusion::ExceptionalCase2a2bPi3, reasons };
            }
            _ => {}
        }
    }
    if inp.angle_mode != AngleMode::Incommensurable && inp.other_vertices > 0 {
        reasons.push(format!("{} vertex(es) outside the vertex-type table", inp.other_vertices));
    }
    reasons.push("relations do not determine both ratios".into());
    Verdict { conclusion: Conclusion::Undetermined, reasons }
}
