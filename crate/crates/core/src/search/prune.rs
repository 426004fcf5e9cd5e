
use super::frontier::{Gap, ANGLE_TOL};
use super::regions::Region;
use crate::exact::{AngleMode, EdgeLabel, TileSpec};
use crate::geometry::point_segment_distance;
use crate::model::{geom_tol, PlacedTile};

/// What a pruning rule may inspect at a search node.
pub struct NodeView<'a> {
    pub spec: &'a TileSpec,
    pub region: &'a Region,
    pub tiles: &'a [PlacedTile],
    pub gap: &'a Gap,
    /// Number of tiles a complete tiling has.
    pub target: usize,
}

/// A necessary condition for a partial tiling to extend to a complete one.
pub trait PruneRule: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    /// Whether the rule is sound for this tile.
    fn applies_to(&self, _spec: &TileSpec) -> bool {
        true
    }
    /// `true` when the node cannot be completed.
    fn prune(&self, node: &NodeView) -> bool;
}

/// Whether `x` is a nonnegative integer combination of `parts` (within `tol`).
pub(crate) fn representable(x: f64, parts: &[f64], tol: f64) -> bool {
    fn go(x: f64, parts: &[f64], tol: f64) -> bool {
        if x.abs() <= tol {
            return true;
        }
        if x < -tol || parts.is_empty() {
            return false;
        }
        let p = parts[0];
        let mut k = 0.0;
        while k * p <= x + tol {
            if go(x - k * p, &parts[1..], tol) {
                return true;
            }
            k += 1.0;
        }
        false
    }
    go(x, parts, tol)
}

/// The frontier sector must be a sum of tile angles.
pub struct AngleCensus;

impl PruneRule for AngleCensus {
    fn name(&self) -> &'static str {
        "angle-census"
    }
    fn summary(&self) -> &'static str {
        "the open sector at the frontier vertex must be a sum of α, β and γ"
    }
    fn prune(&self, node: &NodeView) -> bool {
        let s = node.spec;
        !representable(node.gap.width, &[s.gamma(), s.beta(), s.alpha()], ANGLE_TOL * 10.0)
    }
}

/// Each uncovered stretch of a region side must be a sum of side lengths.
pub struct SegmentRelation;

impl PruneRule for SegmentRelation {
    fn name(&self) -> &'static str {
        "segment-relation"
    }
    fn summary(&self) -> &'static str {
        "uncovered stretches of region sides must be sums of a, b and c"
    }
    fn prune(&self, node: &NodeView) -> bool {
        let tol = geom_tol();
        let s = node.spec;
        let parts = [s.c(), s.b(), s.a()];
        for (p, q) in node.region.polygon.edges() {
            let d = q - p;
            let len = d.norm();
            let mut covered: Vec<(f64, f64)> = node
                .tiles
                .iter()
                .flat_map(|t| t.edges.iter())
                .filter(|e| point_segment_distance(e.from, p, q) <= tol && point_segment_distance(e.to, p, q) <= tol)
                .map(|e| {
                    let (x, y) = ((e.from - p).dot(d) / len, (e.to - p).dot(d) / len);
                    (x.min(y), x.max(y))
                })
                .collect();
            covered.sort_by(|x, y| x.0.total_cmp(&y.0));
            let mut at = 0.0;
            for (x, y) in covered.into_iter().chain(std::iter::once((len, len))) {
                if x > at + tol && !representable(x - at, &parts, 1e-7) {
                    return true;
                }
                at = at.max(y);
            }
        }
        false
    }
}

/// With α/π irrational every tile has ζ = ±(c + a − b), so ζ of the region boundary
/// bounds the signed count of tiles. Experimental.
pub struct ZhFeasibility;

impl PruneRule for ZhFeasibility {
    fn name(&self) -> &'static str {
        "zh-feasibility"
    }
    fn summary(&self) -> &'static str {
        "ζ(boundary) must equal (c + a − b)·s with |s| and parity reachable by the remaining tiles (experimental)"
    }
    fn applies_to(&self, spec: &TileSpec) -> bool {
        spec.angle_mode() == AngleMode::Incommensurable
    }
    fn prune(&self, node: &NodeView) -> bool {
        let s = node.spec;
        let unit = s.c() + s.a() - s.b();
        let boundary: f64 = node
            .region
            .polygon
            .edges()
            .zip(&node.region.classes)
            .map(|((p, q), cl)| p.dist(q) * cl.zh_sign() as f64)
            .sum();
        let target = boundary / unit;
        let rounded = target.round();
        if (target - rounded).abs() > 1e-6 {
            return true;
        }
        let placed: i64 = node.tiles.iter().map(|t| t.edge(EdgeLabel::C).class.zh_sign() as i64).sum();
        let remaining = node.target as i64 - node.tiles.len() as i64;
        let need = rounded as i64 - placed;
        need.abs() > remaining || (need - remaining).rem_euclid(2) != 0
    }
}

/// Pruning rules selectable by name.
pub struct PruneRegistry {
    rules: Vec<(Box<dyn PruneRule>, bool)>,
}

impl PruneRegistry {
    /// Built-in rules; `zh-feasibility` is registered but off by default.
    pub fn builtin() -> Self {
        PruneRegistry {
            rules: vec![(Box::new(AngleCensus), true), (Box::new(SegmentRelation), true), (Box::new(ZhFeasibility), false)],
        }
    }

    pub fn register(&mut self, rule: Box<dyn PruneRule>, default_on: bool) {
        self.rules.retain(|(r, _)| r.name() != rule.name());
        self.rules.push((rule, default_on));
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.rules.iter().map(|(r, _)| r.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn PruneRule> {
        self.rules.iter().find(|(r, _)| r.name() == name).map(|(r, _)| r.as_ref())
    }

    pub fn defaults(&self) -> Vec<&'static str> {
        self.rules.iter().filter(|(_, on)| *on).map(|(r, _)| r.name()).collect()
    }
}

