use crate::error::InvariantError;
use crate::exact::{AngleClass, EdgeLabel, SymLen, TileSpec};
use crate::geometry::Polygon;
use crate::model::{boundary_walk, geom_tol, LabelOrder, PlacedTile, Placement, Tiling};

use super::zh_edge;

fn tooth(anchor_end: crate::geometry::Point, class: AngleClass) -> Placement {
    Placement { anchor: anchor_end, dir: class.negate(), labels: LabelOrder::parse("cab").expect("valid order") }
}

/// ζ of the two outer edges of the tooth standing on a boundary c-edge of class `class`.
pub fn sawtooth_tooth_zh(spec: &TileSpec, class: AngleClass, frame: AngleClass) -> SymLen {
    let t = PlacedTile::new(0, tooth(crate::geometry::Point::new(0.0, 0.0), class), spec).expect("tile closes");
    t.edges.iter().filter(|e| e.label != EdgeLabel::C).map(|e| zh_edge(e.label, e.class, frame)).sum()
}

/// ζ of the augmented boundary for a region whose sides have the given classes and
/// c-edge counts.
pub fn sawtooth_boundary_zh(spec: &TileSpec, sides: &[(AngleClass, i64)], frame: AngleClass) -> SymLen {
    sides.iter().map(|(cl, n)| sawtooth_tooth_zh(spec, *cl, frame) * (*n as i32)).sum()
}

/// Appends one tile outside every boundary c-edge, each with its c-edge on the boundary
/// and labels `cab` counterclockwise, so that each tooth forms a kite or parallelogram
/// with the boundary tile it stands on.
pub fn sawtooth_augment(t: &Tiling) -> Result<Tiling, InvariantError> {
    let walk = boundary_walk(t)?;
    let mut new_region = Vec::new();
    let mut tiles: Vec<PlacedTile> = t.tiles.clone();
    for side in &walk {
        if side.sym.is_none() {
            return Err(InvariantError::BoundaryNotAllC(format!(
                "side from ({:.6}, {:.6}) is not fully covered by tile edges",
                side.from.x, side.from.y
            )));
        }
        if side.fragments.is_empty() {
            new_region.push(side.from);
            continue;
        }
        for &f in &side.fragments {
            let fr = &t.fragments[f];
            if fr.label != EdgeLabel::C {
                return Err(InvariantError::BoundaryNotAllC(format!("tile {} has its {} edge on the boundary", fr.tile, fr.label)));
            }
            let (s, e) = (t.vertices[fr.from].point, t.vertices[fr.to].point);
            let tooth = PlacedTile::new(tiles.len(), tooth(e, fr.class), &t.spec)?;
            new_region.push(s);
            new_region.push(tooth.vertices()[2]);
            tiles.push(tooth);
        }
    }
    if tiles.len() == t.tiles.len() {
        return Ok(t.clone());
    }
    let region = Polygon::new(new_region).simplified(geom_tol());
    Ok(Tiling::from_tiles(t.spec.clone(), tiles, Some(region), t.opts())?)
}
