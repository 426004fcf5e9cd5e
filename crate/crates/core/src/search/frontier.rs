use std::f64::consts::{PI, TAU};

use super::regions::Region;
use crate::exact::{EdgeLabel, TileSpec};
use crate::geometry::{convex_interiors_overlap, point_in_segment_interior, segments_cross_properly, Point};
use crate::model::{geom_tol, AngleLabel, Chirality, LabelOrder, PlacedTile, Placement};
use crate::exact::AngleClass;

pub(crate) const ANGLE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug)]
struct Arc {
    start: AngleClass,
    end: AngleClass,
    s: f64,
    w: f64,
}

impl Arc {
    fn new(start: AngleClass, end: AngleClass, width: f64, alpha: f64) -> Arc {
        Arc { start, end, s: start.radians(alpha), w: width }
    }
}

/// The first uncovered angular sector at the lowest-then-leftmost point that has one.
#[derive(Clone, Copy, Debug)]
pub struct Gap {
    pub point: Point,
    pub start: AngleClass,
    pub end: AngleClass,
    pub width: f64,
}

fn occupied(p: Point, tiles: &[PlacedTile], region: &Region, spec: &TileSpec) -> Option<Vec<Arc>> {
    let tol = geom_tol();
    let alpha = spec.alpha();
    let poly = &region.polygon;
    let n = poly.len();
    let mut arcs = Vec::new();
    if let Some(i) = poly.vertex_index(p, tol) {
        let prev = region.classes[(i + n - 1) % n];
        let (a, b) = (poly.points[(i + 1) % n] - p, poly.points[(i + n - 1) % n] - p);
        let interior = a.cross(b).atan2(a.dot(b)).rem_euclid(TAU);
        arcs.push(Arc::new(prev.negate(), region.classes[i], TAU - interior, alpha));
    } else if let Some(i) = (0..n).find(|&i| point_in_segment_interior(p, poly.points[i], poly.points[(i + 1) % n], tol)) {
        arcs.push(Arc::new(region.classes[i].negate(), region.classes[i], PI, alpha));
    } else if !poly.contains(p, tol) {
        return None;
    }
    for t in tiles {
        for i in 0..3 {
            let e = &t.edges[i];
            if e.from.dist(p) <= tol {
                let inc = t.edges[(i + 2) % 3].class.negate();
                arcs.push(Arc::new(e.class, inc, t.angle_at(i).radians(spec), alpha));
            } else if point_in_segment_interior(p, e.from, e.to, tol) {
                arcs.push(Arc::new(e.class, e.class.negate(), PI, alpha));
            }
        }
    }
    Some(arcs)
}

fn gaps(mut arcs: Vec<Arc>) -> Vec<(AngleClass, AngleClass, f64, f64)> {
    if arcs.is_empty() {
        return Vec::new();
    }
    arcs.sort_by(|a, b| a.s.total_cmp(&b.s));
    let mut out = Vec::new();
    let mut reach = arcs[0].s + arcs[0].w;
    let mut reach_class = arcs[0].end;
    for a in &arcs[1..] {
        if a.s > reach + ANGLE_TOL && a.start != reach_class {
            out.push((reach_class, a.start, reach, a.s - reach));
        }
        if a.s + a.w > reach {
            reach = a.s + a.w;
            reach_class = a.end;
        }
    }
    let wrap = arcs[0].s + TAU;
    if wrap > reach + ANGLE_TOL && arcs[0].start != reach_class {
        out.push((reach_class, arcs[0].start, reach, wrap - reach));
    }
    out
}

/// Finds the frontier gap, or `None` when every candidate point is fully surrounded.
pub fn frontier(tiles: &[PlacedTile], region: &Region, spec: &TileSpec) -> Option<Gap> {
    let tol = geom_tol();
    let mut pts: Vec<Point> = region.polygon.points.clone();
    for t in tiles {
        for v in t.vertices() {
            if !pts.iter().any(|q| q.dist(v) <= tol) {
                pts.push(v);
            }
        }
    }
    pts.sort_by(|a, b| a.lowest_leftmost_cmp(*b, tol));
    for p in pts {
        let Some(arcs) = occupied(p, tiles, region, spec) else { continue };
        let g = gaps(arcs);
        if let Some(&(start, end, _, w)) = g.iter().min_by(|x, y| x.2.rem_euclid(TAU).total_cmp(&y.2.rem_euclid(TAU))) {
            return Some(Gap { point: p, start, end, width: w });
        }
    }
    None
}

fn inside(t: &PlacedTile, region: &Region, tol: f64) -> bool {
    let v = t.vertices();
    let poly = &region.polygon;
    if !v.iter().all(|p| poly.contains(*p, tol)) {
        return false;
    }
    let centroid = (v[0] + v[1] + v[2]) * (1.0 / 3.0);
    if !poly.contains(centroid, tol) {
        return false;
    }
    !t.edges.iter().any(|e| poly.edges().any(|(a, b)| segments_cross_properly(e.from, e.to, a, b, tol)))
}

fn overlaps_any(t: &PlacedTile, tiles: &[PlacedTile], tol: f64) -> bool {
    let v = t.vertices();
    let (x0, x1) = (v.iter().map(|p| p.x).fold(f64::INFINITY, f64::min), v.iter().map(|p| p.x).fold(f64::NEG_INFINITY, f64::max));
    let (y0, y1) = (v.iter().map(|p| p.y).fold(f64::INFINITY, f64::min), v.iter().map(|p| p.y).fold(f64::NEG_INFINITY, f64::max));
    tiles.iter().any(|o| {
        let w = o.vertices();
        if w.iter().all(|p| p.x <= x0 + tol) || w.iter().all(|p| p.x >= x1 - tol) || w.iter().all(|p| p.y <= y0 + tol) || w.iter().all(|p| p.y >= y1 - tol) {
            return false;
        }
        convex_interiors_overlap(&v, &w, tol)
    })
}

/// Tiles with a vertex at the gap point whose wedge starts on the gap's first ray,
/// fit in the gap, lie in the region and overlap nothing, in a fixed order.
pub fn candidates(gap: &Gap, tiles: &[PlacedTile], region: &Region, spec: &TileSpec, allow_mirrored: bool) -> Vec<PlacedTile> {
    let tol = geom_tol();
    let width_class = gap.end - gap.start;
    let mut out = Vec::new();
    for angle in [AngleLabel::Alpha, AngleLabel::Beta, AngleLabel::Gamma] {
        if angle.radians(spec) > gap.width + ANGLE_TOL && angle.class() != width_class {
            continue;
        }
        let opp = angle.opposite_edge();
        for first in EdgeLabel::ALL {
            if first == opp {
                continue;
            }
            let third = EdgeLabel::ALL.into_iter().find(|l| *l != first && *l != opp).unwrap();
            let labels = LabelOrder([first, opp, third]);
            if !allow_mirrored && labels.chirality() == Chirality::Mirrored {
                continue;
            }
            let Ok(t) = PlacedTile::new(tiles.len(), Placement { anchor: gap.point, dir: gap.start, labels }, spec) else { continue };
            if inside(&t, region, tol) && !overlaps_any(&t, tiles, tol) {
                out.push(t);
            }
        }
    }
    out
}
