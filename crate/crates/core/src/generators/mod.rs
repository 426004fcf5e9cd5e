//! Standard constructions: quadratic tilings, kites, parallelograms, the six-tile star
//! fixture, all-c equilateral patches, and the worked-example arithmetic.
//!
//! Each construction is a [`Generator`] registered by name in a [`GeneratorRegistry`].

mod constructions;
mod worked;

use crate::error::TilingError;
use crate::exact::{AngleClass, EdgeLabel, TileSpec};
use crate::geometry::{Polygon, RigidMotion};
use crate::model::{BuildOptions, PlacedTile, Placement, Tiling, TilingMode};

pub use constructions::{
    gen_allc_equilateral, gen_star_fixture, gen_kite, gen_parallelogram, gen_quadratic, AllcEquilateral, StarFixture,
    Kite, Parallelogram, Quadratic, STAR_X,
};
pub use worked::{worked_example_arithmetic, WorkedExample};

#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    /// Size parameter (`n` for quadratic tilings, c-edges per side for all-c patches).
    pub n: usize,
    /// Label of the edge shared by the two tiles of a kite or parallelogram.
    pub shared: EdgeLabel,
    /// Rotation applied to the construction.
    pub frame: AngleClass,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { n: 1, shared: EdgeLabel::C, frame: AngleClass::ZERO }
    }
}

pub trait Generator: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn generate(&self, spec: &TileSpec, params: &GenParams) -> Result<Tiling, TilingError>;
}

/// Generators selectable by name at runtime.
pub struct GeneratorRegistry {
    entries: Vec<Box<dyn Generator>>,
}

impl GeneratorRegistry {
    pub fn empty() -> Self {
        GeneratorRegistry { entries: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut r = GeneratorRegistry::empty();
        r.register(Box::new(Quadratic));
        r.register(Box::new(Kite));
        r.register(Box::new(Parallelogram));
        r.register(Box::new(StarFixture));
        r.register(Box::new(AllcEquilateral));
        r
    }

    /// Adds a generator, replacing any existing one with the same name.
    pub fn register(&mut self, g: Box<dyn Generator>) {
        self.entries.retain(|e| e.name() != g.name());
        self.entries.push(g);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Generator> {
        self.entries.iter().find(|e| e.name() == name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }
}

/// Builds a tiling from placements in the construction frame, then rotates it by `frame`.
pub(crate) fn assemble(
    spec: &TileSpec,
    placements: &[Placement],
    region: Option<Polygon>,
    mode: TilingMode,
    frame: AngleClass,
) -> Result<Tiling, TilingError> {
    let m = RigidMotion::rotation(frame);
    let tiles = placements
        .iter()
        .enumerate()
        .map(|(i, p)| PlacedTile::new(i, *p, spec).map(|t| t.transformed(&m, spec)))
        .collect::<Result<Vec<_>, _>>()?;
    let region = match region {
        Some(r) => Some(r.transformed(&m, spec.alpha())),
        None if mode == TilingMode::Full => Some(crate::model::infer_region(spec, &tiles)?),
        None => None,
    };
    Tiling::from_tiles(spec.clone(), tiles, region, BuildOptions { mode, allow_mirrored: true })
}
