//! The signed edge invariant ζ: each directed edge of class `(j, k)` contributes
//! `(−1)^j` times its length, measured in a chosen reference frame.

mod sawtooth;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::InvariantError;
use crate::exact::{AngleClass, EdgeLabel, SymLen};
use crate::geometry::Point;
use crate::model::{boundary_walk, geom_tol, PlacedTile, SegmentKind, Side, Tiling};

pub use sawtooth::{sawtooth_augment, sawtooth_boundary_zh, sawtooth_tooth_zh};

/// ζ of a directed edge of the given label and class, in the frame whose reference
/// direction has class `frame`.
pub fn zh_edge(label: EdgeLabel, class: AngleClass, frame: AngleClass) -> SymLen {
    SymLen::label(label) * (class - frame).zh_sign()
}

pub fn zh_tile(t: &PlacedTile, frame: AngleClass) -> SymLen {
    t.edges.iter().map(|e| zh_edge(e.label, e.class, frame)).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct ZhReport {
    /// Class of the direction taken as the x-axis.
    pub frame: AngleClass,
    pub zh_tiling: SymLen,
    /// `None` when the region boundary is not fully covered by tile edges.
    pub zh_boundary: Option<SymLen>,
    pub per_tile: Vec<SymLen>,
    pub symbolic_equal: Option<bool>,
    pub numeric_tiling: f64,
    pub numeric_boundary: Option<f64>,
    pub numeric_equal: Option<bool>,
}

/// Reference frame: class of the boundary side leaving the lowest-then-leftmost corner.
pub fn default_frame(t: &Tiling) -> Result<AngleClass, InvariantError> {
    if t.region.is_some() {
        let walk = boundary_walk(t).map_err(|e| InvariantError::Frame(e.to_string()))?;
        return walk.first().map(|e| e.class).ok_or_else(|| InvariantError::Frame("empty boundary".into()));
    }
    let tol = geom_tol();
    let pieces = t.one_sided_pieces();
    let (seg, (p, q)) = pieces
        .iter()
        .min_by(|x, y| x.1 .0.lowest_leftmost_cmp(y.1 .0, tol))
        .ok_or_else(|| InvariantError::Frame("no boundary segment".into()))?;
    let s = &t.segments[*seg];
    Ok(if (*q - *p).dot(s.dir) > 0.0 { s.class } else { s.class.negate() })
}

pub fn zh_tiling(t: &Tiling, frame: Option<AngleClass>) -> Result<ZhReport, InvariantError> {
    let frame = match frame {
        Some(f) => f,
        None => default_frame(t)?,
    };
    let per_tile: Vec<SymLen> = t.tiles.par_iter().map(|tile| zh_tile(tile, frame)).collect();
    let zh_tiling: SymLen = per_tile.iter().cloned().sum();
    let zh_boundary = match &t.region {
        Some(_) => {
            let walk = boundary_walk(t)?;
            walk.iter()
                .map(|e| e.sym.clone().map(|s| s * (e.class - frame).zh_sign()))
                .collect::<Option<Vec<_>>>()
                .map(|v| v.into_iter().sum::<SymLen>())
        }
        None => None,
    };
    let (a, b, c) = (t.spec.a(), t.spec.b(), t.spec.c());
    let numeric_tiling = zh_tiling.eval(a, b, c);
    let numeric_boundary = zh_boundary.as_ref().map(|z| z.eval(a, b, c));
    let scale = c * (t.tiles.len() as f64 + 1.0);
    Ok(ZhReport {
        frame,
        symbolic_equal: zh_boundary.as_ref().map(|z| *z == zh_tiling),
        numeric_equal: numeric_boundary.map(|nb| (nb - numeric_tiling).abs() <= 1e-9 * scale),
        zh_tiling,
        zh_boundary,
        per_tile,
        numeric_tiling,
        numeric_boundary,
    })
}

/// ζ of two tiles whose c-edges are antiparallel and on one line (not necessarily adjacent).
pub fn zh_kite_parallelogram_check(t1: &PlacedTile, t2: &PlacedTile, frame: AngleClass) -> Result<SymLen, InvariantError> {
    let (e1, e2) = (t1.edge(EdgeLabel::C), t2.edge(EdgeLabel::C));
    if e2.class != e1.class.negate() {
        return Err(InvariantError::NotAKiteOrParallelogram(format!(
            "c-edges of tiles {} and {} are not antiparallel ({} vs {})",
            t1.id, t2.id, e1.class, e2.class
        )));
    }
    let d = e1.to - e1.from;
    let off = |p: Point| d.cross(p - e1.from) / d.norm();
    if off(e2.from).abs() > geom_tol() || off(e2.to).abs() > geom_tol() {
        return Err(InvariantError::NotAKiteOrParallelogram(format!("c-edges of tiles {} and {} are not collinear", t1.id, t2.id)));
    }
    Ok(zh_tile(t1, frame) + zh_tile(t2, frame))
}

#[derive(Clone, Debug, Serialize)]
pub struct SegmentCCount {
    pub segment: usize,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    /// c-internal tiles left without a partner.
    pub unmatched: Vec<usize>,
    /// c-fragment counts on the two sides of every segment carrying c-internal edges.
    pub per_segment: Vec<SegmentCCount>,
}

/// Pairs c-internal tiles whose c-edges lie on one maximal segment with interiors on
/// opposite sides, in positional order along the segment.
pub fn match_c_internal(t: &Tiling) -> Matching {
    let mut on_boundary = vec![false; t.fragments.len()];
    if t.region.is_some() {
        if let Ok(walk) = boundary_walk(t) {
            for e in walk {
                for f in e.fragments {
                    on_boundary[f] = true;
                }
            }
        }
    }
    let mut pairs = Vec::new();
    let mut unmatched = Vec::new();
    let mut per_segment = Vec::new();
    for seg in &t.segments {
        let cs = |side: Side| -> Vec<usize> {
            seg.side(side)
                .iter()
                .copied()
                .filter(|&f| t.fragments[f].label == EdgeLabel::C && !on_boundary[f])
                .map(|f| t.fragments[f].tile)
                .collect()
        };
        let (l, r) = (cs(Side::Left), cs(Side::Right));
        if l.is_empty() && r.is_empty() {
            continue;
        }
        if seg.kind != SegmentKind::Boundary {
            per_segment.push(SegmentCCount { segment: seg.id, left: l.len(), right: r.len() });
        }
        for (x, y) in l.iter().zip(&r) {
            pairs.push((*x, *y));
        }
        let n = l.len().min(r.len());
        unmatched.extend(l[n..].iter().chain(&r[n..]));
    }
    unmatched.sort_unstable();
    Matching { pairs, unmatched, per_segment }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::TileSpec;
    use crate::model::Placement;
    use crate::generators::{gen_allc_equilateral, gen_kite, gen_parallelogram, gen_quadratic};

    fn spec() -> TileSpec {
        TileSpec::from_integer_sides(3, 5).unwrap()
    }

    #[test]
    fn edge_signs() {
        assert_eq!(zh_edge(EdgeLabel::C, AngleClass::ZERO, AngleClass::ZERO), SymLen::label(EdgeLabel::C));
        assert_eq!(zh_edge(EdgeLabel::A, AngleClass::new(5, 1), AngleClass::ZERO), -SymLen::label(EdgeLabel::A));
        let x = AngleClass::new(2, 3);
        assert_eq!(zh_edge(EdgeLabel::B, x.negate(), AngleClass::ZERO), -zh_edge(EdgeLabel::B, x, AngleClass::ZERO));
    }

    #[test]
    fn tile_value_depends_on_c_edge_only() {
        let s = spec();
        for labels in ["abc", "bca", "cab", "acb", "cba", "bac"] {
            let t = PlacedTile::new(0, Placement { anchor: Point::new(1.0, 2.0), dir: AngleClass::new(1, 2), labels: crate::model::LabelOrder::parse(labels).unwrap() }, &s).unwrap();
            let sign = t.edge(EdgeLabel::C).class.zh_sign();
            assert_eq!(zh_tile(&t, AngleClass::ZERO), SymLen::from_ints(1, -1, 1) * sign);
        }
    }

    #[test]
    fn quadratic_boundary_identity() {
        for n in 1..=5 {
            let t = gen_quadratic(&spec(), n, AngleClass::new(1, 1)).unwrap();
            let r = zh_tiling(&t, None).unwrap();
            assert_eq!(r.symbolic_equal, Some(true));
            assert_eq!(r.frame, AngleClass::new(1, 1));
        }
    }

    #[test]
    fn pairs_are_null() {
        for l in EdgeLabel::ALL {
            for t in [gen_kite(&spec(), l, AngleClass::ZERO).unwrap(), gen_parallelogram(&spec(), l, AngleClass::ZERO).unwrap()] {
                if l == EdgeLabel::C {
                    assert!(zh_kite_parallelogram_check(&t.tiles[0], &t.tiles[1], AngleClass::ZERO).unwrap().is_zero());
                }
                assert_eq!(zh_tiling(&t, None).unwrap().symbolic_equal, Some(true));
            }
        }
        let k = gen_kite(&spec(), EdgeLabel::A, AngleClass::ZERO).unwrap();
        assert!(zh_kite_parallelogram_check(&k.tiles[0], &k.tiles[1], AngleClass::ZERO).is_err());
    }

    #[test]
    fn sawtooth_on_allc_patch() {
        let s = spec();
        for x in 1..=4 {
            let t = gen_allc_equilateral(&s, x, AngleClass::ZERO).unwrap();
            let aug = sawtooth_augment(&t).unwrap();
            assert_eq!(aug.tiles.len(), 6 * x);
            let r = zh_tiling(&aug, Some(AngleClass::ZERO)).unwrap();
            assert_eq!(r.zh_boundary, Some(SymLen::from_ints(-1, 1, 0) * (3 * x as i32)));
        }
    }

    #[test]
    fn sawtooth_rejects_non_c_boundary() {
        let t = gen_quadratic(&spec(), 2, AngleClass::ZERO).unwrap();
        assert!(matches!(sawtooth_augment(&t), Err(InvariantError::BoundaryNotAllC(_))));
    }

    #[test]
    fn matching_in_quadratic() {
        let s = TileSpec::from_integer_sides(1, 2).unwrap();
        let t = gen_quadratic(&s, 4, AngleClass::ZERO).unwrap();
        let m = match_c_internal(&t);
        assert!(m.unmatched.is_empty());
        assert_eq!(m.pairs.len(), 6);
        assert!(m.per_segment.iter().all(|c| c.left == c.right));
    }
}
