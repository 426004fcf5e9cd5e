use super::{assemble, GenParams, Generator};
use crate::error::TilingError;
use crate::exact::{AngleClass, EdgeLabel, TileSpec};
use crate::geometry::{Point, Polygon};
use crate::model::{Chirality, LabelOrder, PlacedTile, Placement, Tiling, TilingMode};

fn order(s: &str) -> LabelOrder {
    LabelOrder::parse(s).expect("valid label order")
}

fn origin() -> Point {
    Point::new(0.0, 0.0)
}

/// The `n²`-tile tiling of the triangle similar to the tile with ratio `n`.
pub fn gen_quadratic(spec: &TileSpec, n: usize, frame: AngleClass) -> Result<Tiling, TilingError> {
    if n == 0 {
        return Err(TilingError::Malformed("quadratic tiling needs n ≥ 1".into()));
    }
    let labels = order("cab");
    let base = PlacedTile::new(0, Placement { anchor: origin(), dir: AngleClass::ZERO, labels }, spec)?;
    let [_, u, w] = base.vertices();
    let mut placements = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n - j {
            let p = u * i as f64 + w * j as f64;
            placements.push(Placement { anchor: p, dir: AngleClass::ZERO, labels });
            if i + j + 1 < n {
                placements.push(Placement { anchor: p + u + w, dir: AngleClass::PI, labels });
            }
        }
    }
    let nf = n as f64;
    let region = Polygon::new(vec![origin(), u * nf, w * nf]);
    assemble(spec, &placements, Some(region), TilingMode::Full, frame)
}

/// Two tiles reflected across their common `shared` edge.
pub fn gen_kite(spec: &TileSpec, shared: EdgeLabel, frame: AngleClass) -> Result<Tiling, TilingError> {
    let first = Placement { anchor: origin(), dir: AngleClass::ZERO, labels: LabelOrder::starting_with(shared, Chirality::Direct) };
    let second = Placement {
        anchor: Point::new(spec.side(shared), 0.0),
        dir: AngleClass::PI,
        labels: LabelOrder::starting_with(shared, Chirality::Mirrored),
    };
    assemble(spec, &[first, second], None, TilingMode::Full, frame)
}

/// Two tiles related by the half-turn about the midpoint of their common `shared` edge.
pub fn gen_parallelogram(spec: &TileSpec, shared: EdgeLabel, frame: AngleClass) -> Result<Tiling, TilingError> {
    let labels = LabelOrder::starting_with(shared, Chirality::Direct);
    let first = Placement { anchor: origin(), dir: AngleClass::ZERO, labels };
    let second = Placement { anchor: Point::new(spec.side(shared), 0.0), dir: AngleClass::PI, labels };
    assemble(spec, &[first, second], None, TilingMode::Full, frame)
}

/// Position of the star vertex of the six-tile fixture (before any frame rotation).
pub const STAR_X: Point = Point::new(0.0, 0.0);

/// Six tiles meeting at `X` with angles β, β, β, α, α, α (counterclockwise from the
/// negative x-axis), above the c-edge of a seventh tile that passes through `X`.
/// The a-edge on the negative x-axis ends at `X` while the edge below continues, so an
/// a-link enters `X`; every other a-edge at `X` is matched by an a-edge of equal length.
pub fn gen_star_fixture(spec: &TileSpec, frame: AngleClass) -> Result<Tiling, TilingError> {
    // Tiles in counterclockwise order from the positive x-axis: angle at X and labels
    // (first label on the start ray, last label on the end ray).
    let around = [("cab", AngleClass::ALPHA), ("bac", AngleClass::ALPHA), ("cab", AngleClass::ALPHA), ("cba", AngleClass::BETA), ("abc", AngleClass::BETA), ("cba", AngleClass::BETA)];
    let mut ray = AngleClass::ZERO;
    let mut upper = Vec::new();
    for (labels, turn) in around {
        upper.push(Placement { anchor: STAR_X, dir: ray, labels: order(labels) });
        ray = ray + turn;
    }
    debug_assert_eq!(ray, AngleClass::PI);
    // Listed T1..T6 from the negative x-axis clockwise, then the tile below.
    let mut placements: Vec<Placement> = upper.into_iter().rev().collect();
    placements.push(Placement { anchor: Point::new(spec.c() - spec.a(), 0.0), dir: AngleClass::PI, labels: order("cab") });
    assemble(spec, &placements, None, TilingMode::Fragment, frame)
}

/// Equilateral triangle of side `x·c` with `x` direct tiles standing on each side by their
/// c-edges. At each corner the α of one side's first tile meets the β of the previous
/// side's last tile. The interior is left open.
pub fn gen_allc_equilateral(spec: &TileSpec, x: usize, frame: AngleClass) -> Result<Tiling, TilingError> {
    if x == 0 {
        return Err(TilingError::Malformed("need at least one c-edge per side".into()));
    }
    let labels = order("cab");
    let mut corner = origin();
    let mut corners = Vec::new();
    let mut placements = Vec::new();
    for s in 0..3 {
        let dir = AngleClass::new(2 * s, 0);
        let (ux, uy) = dir.unit(spec.alpha());
        let u = Point::new(ux, uy) * spec.c();
        corners.push(corner);
        for i in 0..x {
            placements.push(Placement { anchor: corner + u * i as f64, dir, labels });
        }
        corner = corner + u * x as f64;
    }
    assemble(spec, &placements, Some(Polygon::new(corners)), TilingMode::Fragment, frame)
}

pub struct Quadratic;
pub struct Kite;
pub struct Parallelogram;
pub struct StarFixture;
pub struct AllcEquilateral;

impl Generator for Quadratic {
    fn name(&self) -> &'static str {
        "quadratic"
    }
    fn summary(&self) -> &'static str {
        "n² tiles filling the tile scaled by n"
    }
    fn generate(&self, spec: &TileSpec, p: &GenParams) -> Result<Tiling, TilingError> {
        gen_quadratic(spec, p.n, p.frame)
    }
}

impl Generator for Kite {
    fn name(&self) -> &'static str {
        "kite"
    }
    fn summary(&self) -> &'static str {
        "two tiles mirrored across a shared edge"
    }
    fn generate(&self, spec: &TileSpec, p: &GenParams) -> Result<Tiling, TilingError> {
        gen_kite(spec, p.shared, p.frame)
    }
}

impl Generator for Parallelogram {
    fn name(&self) -> &'static str {
        "parallelogram"
    }
    fn summary(&self) -> &'static str {
        "two tiles related by a half-turn about a shared edge midpoint"
    }
    fn generate(&self, spec: &TileSpec, p: &GenParams) -> Result<Tiling, TilingError> {
        gen_parallelogram(spec, p.shared, p.frame)
    }
}

impl Generator for StarFixture {
    fn name(&self) -> &'static str {
        "star-fixture"
    }
    fn summary(&self) -> &'static str {
        "open patch: six tiles at a star vertex on an internal segment"
    }
    fn generate(&self, spec: &TileSpec, p: &GenParams) -> Result<Tiling, TilingError> {
        gen_star_fixture(spec, p.frame)
    }
}

impl Generator for AllcEquilateral {
    fn name(&self) -> &'static str {
        "allc-equilateral"
    }
    fn summary(&self) -> &'static str {
        "open patch: n c-edges on each side of an equilateral triangle"
    }
    fn generate(&self, spec: &TileSpec, p: &GenParams) -> Result<Tiling, TilingError> {
        gen_allc_equilateral(spec, p.n, p.frame)
    }
}
