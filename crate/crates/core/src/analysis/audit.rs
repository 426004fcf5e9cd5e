use std::f64::consts::TAU;

use serde::Serialize;

use super::census::VertexType;
use crate::exact::EdgeLabel;
use crate::model::{geom_tol, Side, Tiling, VertexLocation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionLemma {
    /// A c-edge followed by an a- or b-edge at a π-vertex yields a c/a or c/b segment.
    CThenOther,
    /// An a-edge followed by a b- or c-edge at a simple vertex yields an a/b or a/c segment.
    AThenOther,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditRecord {
    pub vertex: usize,
    pub lemma: ExtensionLemma,
    pub vertex_type: VertexType,
    pub passed: bool,
    /// Labels of the two edges of the emanating segment found, if any.
    pub witness: Option<(EdgeLabel, EdgeLabel)>,
}

/// The labels of the edges before and after `v` on the side of its straight line that
/// carries tile vertices at `v`, if `v` is a π-vertex in the interior of a segment.
fn line_labels(t: &Tiling, v: usize) -> Option<(EdgeLabel, EdgeLabel, f64)> {
    let tol = geom_tol();
    for seg in &t.segments {
        let Some(pos) = t.position_on(seg, v) else { continue };
        if pos <= seg.t_start + tol || pos >= seg.t_end - tol {
            continue;
        }
        for side in [Side::Left, Side::Right] {
            let ids = seg.side(side);
            let before = ids.iter().find(|&&f| (t.fragments[f].t1 - pos).abs() <= tol);
            let after = ids.iter().find(|&&f| (t.fragments[f].t0 - pos).abs() <= tol);
            if let (Some(&b), Some(&a)) = (before, after) {
                let (ux, uy) = (seg.dir.x, seg.dir.y);
                return Some((t.fragments[b].label, t.fragments[a].label, uy.atan2(ux)));
            }
        }
    }
    None
}

/// Rays from `v` strictly off its straight line, each with the labels of the edges on it.
fn interior_rays(t: &Tiling, v: usize, line_dir: f64) -> Vec<Vec<EdgeLabel>> {
    let p = t.vertices[v].point;
    let mut rays: Vec<(f64, Vec<EdgeLabel>)> = Vec::new();
    for w in &t.vertices[v].wedges {
        for e in &t.tiles[w.tile].edges {
            let far = if e.from.dist(p) <= geom_tol() {
                e.to
            } else if e.to.dist(p) <= geom_tol() {
                e.from
            } else {
                continue;
            };
            let d = far - p;
            let th = d.y.atan2(d.x);
            let rel = (th - line_dir).rem_euclid(TAU / 2.0);
            if rel < 1e-7 || TAU / 2.0 - rel < 1e-7 {
                continue;
            }
            match rays.iter_mut().find(|r| {
                let diff = (r.0 - th).rem_euclid(TAU);
                diff < 1e-7 || TAU - diff < 1e-7
            }) {
                Some(r) => r.1.push(e.label),
                None => rays.push((th, vec![e.label])),
            }
        }
    }
    rays.into_iter().map(|r| r.1).collect()
}

fn find_witness(rays: &[Vec<EdgeLabel>], l: EdgeLabel) -> Option<(EdgeLabel, EdgeLabel)> {
    rays.iter().find_map(|r| {
        if r.len() != 2 {
            return None;
        }
        let (x, y) = (r[0], r[1]);
        if x == l && y != l {
            Some((x, y))
        } else if y == l && x != l {
            Some((y, x))
        } else {
            None
        }
    })
}

/// Checks both extension lemmas at every π-vertex meeting their hypotheses.
pub fn audit_extension_lemmas(t: &Tiling) -> Vec<AuditRecord> {
    let mut out = Vec::new();
    for v in &t.vertices {
        if !matches!(v.location, VertexLocation::InternalPi | VertexLocation::Boundary) {
            continue;
        }
        let Some((before, after, dir)) = line_labels(t, v.id) else { continue };
        let ty = VertexType::from_counts(v.counts());
        let pair = |l: EdgeLabel| (before == l) != (after == l);
        let mut check = |lemma: ExtensionLemma, l: EdgeLabel| {
            let witness = find_witness(&interior_rays(t, v.id, dir), l);
            out.push(AuditRecord { vertex: v.id, lemma, vertex_type: ty, passed: witness.is_some(), witness });
        };
        if pair(EdgeLabel::C) {
            check(ExtensionLemma::CThenOther, EdgeLabel::C);
        }
        if pair(EdgeLabel::A) && ty == VertexType::Simple {
            check(ExtensionLemma::AThenOther, EdgeLabel::A);
        }
    }
    out
}
