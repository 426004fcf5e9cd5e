use serde::Serialize;

use super::build::{geom_tol, Tiling};
use crate::error::TilingError;
use crate::exact::{AngleClass, SymLen};
use crate::geometry::{point_segment_distance, Point};

/// One side of the region polygon, walked counterclockwise.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryEdge {
    pub from: Point,
    pub to: Point,
    pub class: AngleClass,
    pub length: f64,
    /// Sum of the labels of the fragments covering this side, when they cover it fully.
    pub sym: Option<SymLen>,
    /// Fragment ids along this side, ordered from `from` to `to`.
    pub fragments: Vec<usize>,
}

/// Walks the region boundary counterclockwise from its lowest-then-leftmost corner.
pub fn boundary_walk(t: &Tiling) -> Result<Vec<BoundaryEdge>, TilingError> {
    let tol = geom_tol();
    let region = t
        .region
        .as_ref()
        .ok_or_else(|| TilingError::NonSimpleBoundary("tiling has no region".into()))?;
    region.is_simple_ccw(tol).map_err(TilingError::NonSimpleBoundary)?;
    let n = region.len();
    let start = (0..n)
        .min_by(|&i, &j| region.points[i].lowest_leftmost_cmp(region.points[j], tol))
        .unwrap_or(0);
    let alpha = t.spec.alpha();
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        let p = region.points[(start + s) % n];
        let q = region.points[(start + s + 1) % n];
        let d = q - p;
        let len = d.norm();
        let mut frs: Vec<(f64, usize)> = t
            .fragments
            .iter()
            .filter(|f| {
                let (a, b) = (t.vertices[f.from].point, t.vertices[f.to].point);
                point_segment_distance(a, p, q) <= tol && point_segment_distance(b, p, q) <= tol && (b - a).dot(d) > 0.0
            })
            .map(|f| ((t.vertices[f.from].point - p).dot(d) / len, f.id))
            .collect();
        frs.sort_by(|x, y| x.0.total_cmp(&y.0));
        let fragments: Vec<usize> = frs.iter().map(|x| x.1).collect();
        let class = match fragments.first() {
            Some(&f) => t.fragments[f].class,
            None => AngleClass::from_radians(d.y.atan2(d.x), alpha, 64, 1e-7).ok_or_else(|| {
                TilingError::Malformed(format!("region side from ({:.6}, {:.6}) has no angle class", p.x, p.y))
            })?,
        };
        let covered: f64 = fragments.iter().map(|&f| t.spec.side(t.fragments[f].label)).sum();
        let sym = if (covered - len).abs() <= 1e-7 * len.max(1.0) {
            Some(fragments.iter().map(|&f| SymLen::label(t.fragments[f].label)).sum())
        } else {
            None
        };
        out.push(BoundaryEdge { from: p, to: q, class, length: len, sym, fragments });
    }
    Ok(out)
}
