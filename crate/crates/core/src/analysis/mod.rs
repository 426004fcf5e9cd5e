//! Structural analysis of a tiling: vertex census, Γ-graphs, extension-lemma audits,
//! segment relations, and the commensurability verdict.

mod audit;
mod census;
mod gamma;
mod relations;
mod verdict;

use std::fmt::Write;

use serde::Serialize;

use crate::error::AnalysisError;
use crate::exact::EdgeLabel;
use crate::model::Tiling;

pub use audit::{audit_extension_lemmas, AuditRecord, ExtensionLemma};
pub use census::{census_identity_check, classify_vertices, contribution, VertexCensus, VertexType};
pub use gamma::{build_gamma_graph, GammaGraph, Link, NodeDegree};
pub use relations::{deduce_ratios, extract_relations, rational_kernel, two_relation_ratio, Ratios, Relation, RelationSet, Witness};
pub use verdict::{boundary_profile, conclude, corner_pattern, BoundaryProfile, Conclusion, CornerPattern, Verdict, VerdictInputs};

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub tiles: usize,
    pub census: VertexCensus,
    pub census_identity: i64,
    pub graphs: Vec<GammaGraph>,
    pub audits: Vec<AuditRecord>,
    pub relations: RelationSet,
    pub ratios: Option<Ratios>,
    pub boundary: BoundaryProfile,
    pub verdict: Verdict,
}

/// Runs every analysis on `t`.
pub fn analyze(t: &Tiling) -> Result<AnalysisReport, AnalysisError> {
    let census = classify_vertices(t)?;
    let census_identity = census_identity_check(&census, census.corner_contrib);
    let graphs: Vec<GammaGraph> = EdgeLabel::ALL.iter().map(|&l| build_gamma_graph(t, l)).collect();
    let audits = audit_extension_lemmas(t);
    let relations = extract_relations(t);
    let ratios = deduce_ratios(&relations.relations);
    let boundary = boundary_profile(t);
    let inputs = VerdictInputs {
        angle_mode: t.spec.angle_mode(),
        corner_pattern: boundary.corner_pattern,
        boundary_all_c: boundary.all_c,
        ratios: ratios.as_ref().map(Ratios::clone).map_err(|e| e.to_string()),
        impossible_segments: relations.impossible.len(),
        census_identity,
        other_vertices: census.other,
        audit_failures: audits.iter().filter(|a| !a.passed).count(),
    };
    let verdict = conclude(&inputs);
    Ok(AnalysisReport { tiles: t.tiles.len(), census, census_identity, graphs, audits, relations, ratios: ratios.ok(), boundary, verdict })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.census;
        let _ = writeln!(s, "tiles: {}", self.tiles);
        let _ = writeln!(s, "angles: α={} β={} γ={}", c.n_alpha, c.n_beta, c.n_gamma);
        let _ = writeln!(
            s,
            "vertices: simple={} star={} center={} double_star={} gamma_star={} double_simple={} other={} corners={} open={}",
            c.simple, c.star, c.center, c.double_star, c.gamma_star, c.double_simple, c.other, c.corners, c.open
        );
        let _ = writeln!(s, "census identity: {}", self.census_identity);
        for g in &self.graphs {
            let _ = writeln!(s, "Γ_{}: {} link(s)", g.label, g.links.len());
            for (v, d) in &g.nodes {
                let _ = writeln!(s, "  vertex {v}: in={} out={} f={}", d.in_degree, d.out_degree, d.f);
            }
        }
        let failed = self.audits.iter().filter(|a| !a.passed).count();
        let _ = writeln!(s, "extension audits: {} checked, {} failed", self.audits.len(), failed);
        let _ = writeln!(s, "relations:");
        for r in &self.relations.relations {
            let _ = writeln!(s, "  {r}");
        }
        match &self.ratios {
            Some(r) => {
                let show = |x: &Option<num_rational::BigRational>| x.as_ref().map_or("undetermined".to_string(), |v| v.to_string());
                let _ = writeln!(s, "a/b: {}  c/b: {}", show(&r.a_over_b), show(&r.c_over_b));
            }
            None => {
                let _ = writeln!(s, "ratios: inconsistent");
            }
        }
        let _ = writeln!(s, "boundary: all_c={} c_counts={:?} corners={:?}", self.boundary.all_c, self.boundary.c_counts, self.boundary.corner_pattern);
        let _ = writeln!(s, "verdict: {}", serde_json::to_value(self.verdict.conclusion).unwrap().as_str().unwrap());
        for r in &self.verdict.reasons {
            let _ = writeln!(s, "  {r}");
        }
        s
    }
}
