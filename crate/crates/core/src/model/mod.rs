//! Placed tiles and the validated planar structure of a tiling.

mod boundary;
mod build;
mod io;
mod tile;

pub use boundary::{boundary_walk, BoundaryEdge};
pub use build::{
    build_tiling, infer_region, BuildOptions, Fragment, MaximalSegment, SegmentKind, Side, Tiling, TilingMode, VertexLocation,
    VertexRecord, Wedge,
};
pub use build::geom_tol;
pub use io::{load_tiling, region_from_json, save_tiling, tiling_from_json, tiling_to_json};
pub use tile::{AngleLabel, Chirality, LabelOrder, PlacedTile, Placement, TileEdge};
