//! JSON reading and writing of tilings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::build::{BuildOptions, Tiling, TilingMode};
use super::tile::{Chirality, LabelOrder, PlacedTile, Placement};
use crate::error::{SpecError, TilingError};
use crate::exact::{fmt_f64, AngleClass, AngleMode, SideMode, TileSpec, GAMMA};
use crate::geometry::{Point, Polygon};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gamma: Option<f64>,
    a: String,
    b: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    angle_mode: Option<AngleMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    side_mode: Option<SideMode>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DirJson {
    j: i64,
    k: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TileJson {
    id: usize,
    anchor: Point,
    dir: DirJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chirality: Option<Chirality>,
    labels_order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Point>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TilingJson {
    spec: SpecJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    region: Option<Vec<Point>>,
    #[serde(default = "default_mode")]
    mode: TilingMode,
    tiles: Vec<TileJson>,
}

fn default_mode() -> TilingMode {
    TilingMode::Full
}

fn spec_from_json(s: &SpecJson) -> Result<TileSpec, TilingError> {
    if let Some(g) = s.gamma {
        if (g - GAMMA).abs() > 1e-9 {
            return Err(SpecError::InvalidSpec(format!("gamma must be 2π/3, got {g}")).into());
        }
    }
    let sides = match &s.c {
        Some(c) => format!("{},{},{}", s.a, s.b, c),
        None => format!("{},{}", s.a, s.b),
    };
    let spec = TileSpec::parse_sides(&sides, s.angle_mode, s.side_mode)?;
    if spec.exact().is_none() && s.alpha.is_some() {
        let [a, b, c] = [spec.a(), spec.b(), spec.c()];
        return Ok(TileSpec::from_numeric(a, b, Some(c), s.alpha, spec.angle_mode(), spec.side_mode())?);
    }
    if let Some(al) = s.alpha {
        if (al - spec.alpha()).abs() > 1e-9 {
            return Err(SpecError::InvalidSpec(format!("alpha {al} disagrees with the sides (expected {})", spec.alpha())).into());
        }
    }
    Ok(spec)
}

/// Parses and validates a tiling from JSON text.
pub fn tiling_from_json(text: &str, opts: Option<BuildOptions>) -> Result<Tiling, TilingError> {
    let raw: TilingJson =
        serde_json::from_str(text).map_err(|e| TilingError::Parse { line: e.line(), column: e.column(), msg: e.to_string() })?;
    let spec = spec_from_json(&raw.spec)?;
    let mut tiles = Vec::with_capacity(raw.tiles.len());
    for (i, t) in raw.tiles.iter().enumerate() {
        if t.id != i {
            return Err(TilingError::Malformed(format!("tile ids must be 0..N in order; found {} at position {i}", t.id)));
        }
        let labels = LabelOrder::parse(&t.labels_order)
            .ok_or_else(|| TilingError::Malformed(format!("tile {}: bad labels_order {:?}", t.id, t.labels_order)))?;
        if let Some(c) = t.chirality {
            if c != labels.chirality() {
                return Err(TilingError::Malformed(format!("tile {}: chirality disagrees with labels_order", t.id)));
            }
        }
        let dir = AngleClass::new(t.dir.j, t.dir.k);
        let placed = PlacedTile::new(t.id, Placement { anchor: t.anchor, dir, labels }, &spec)?;
        if let Some(vs) = &t.vertices {
            if vs.len() != 3 {
                return Err(TilingError::Malformed(format!("tile {}: expected 3 vertices", t.id)));
            }
            let area = (vs[1] - vs[0]).cross(vs[2] - vs[0]);
            if area <= 0.0 {
                return Err(TilingError::Orientation(t.id));
            }
            let tol = crate::model::geom_tol() * 10.0;
            if vs.iter().zip(placed.vertices()).any(|(p, q)| p.dist(q) > tol) {
                return Err(TilingError::Malformed(format!("tile {}: listed vertices disagree with the placement", t.id)));
            }
        }
        tiles.push(placed);
    }
    let opts = opts.unwrap_or(BuildOptions { mode: raw.mode, allow_mirrored: true });
    let region = raw.region.map(Polygon::new);
    Tiling::from_tiles(spec, tiles, region, opts)
}

/// Reads a region given either as a bare point list or as an object with a `region` field.
pub fn region_from_json(text: &str) -> Result<Polygon, TilingError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum RegionJson {
        Points(Vec<Point>),
        Object { region: Vec<Point> },
    }
    let raw: RegionJson =
        serde_json::from_str(text).map_err(|e| TilingError::Parse { line: e.line(), column: e.column(), msg: e.to_string() })?;
    Ok(Polygon::new(match raw {
        RegionJson::Points(p) => p,
        RegionJson::Object { region } => region,
    }))
}

pub fn load_tiling(path: &Path, opts: Option<BuildOptions>) -> Result<Tiling, TilingError> {
    tiling_from_json(&std::fs::read_to_string(path)?, opts)
}

/// Serializes a tiling; field order and number formatting are deterministic.
pub fn tiling_to_json(t: &Tiling) -> String {
    let [a, b, c] = t.spec.side_strings();
    let spec = SpecJson {
        alpha: Some(t.spec.alpha()),
        gamma: None,
        a,
        b,
        c: Some(c),
        angle_mode: Some(t.spec.angle_mode()),
        side_mode: Some(t.spec.side_mode()),
    };
    let tiles = t
        .tiles
        .iter()
        .map(|p| TileJson {
            id: p.id,
            anchor: round_point(p.anchor),
            dir: DirJson { j: p.first_edge_dir.j() as i64, k: p.first_edge_dir.k() },
            chirality: Some(p.chirality),
            labels_order: p.labels.to_string(),
            vertices: Some(p.vertices().iter().map(|v| round_point(*v)).collect()),
        })
        .collect();
    let raw = TilingJson {
        spec,
        region: t.region.as_ref().map(|r| r.points.iter().map(|p| round_point(*p)).collect()),
        mode: t.mode,
        tiles,
    };
    let mut s = serde_json::to_string_pretty(&raw).expect("serializable");
    s.push('\n');
    s
}

pub fn save_tiling(t: &Tiling, path: &Path) -> Result<(), TilingError> {
    std::fs::write(path, tiling_to_json(t))?;
    Ok(())
}

/// Drops float noise around zero so that reloading a saved file settles.
fn round_point(p: Point) -> Point {
    let r = |x: f64| {
        let v: f64 = fmt_f64(x).parse().unwrap_or(x);
        if v.abs() < 1e-12 {
            0.0
        } else {
            v
        }
    };
    Point::new(r(p.x), r(p.y))
}
