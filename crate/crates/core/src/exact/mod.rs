//! Exact arithmetic for tile geometry: angle classes `j·π/3 + k·α`, symbolic side-length
//! combinations over `a, b, c`, and the tile specification.

mod angle;
mod spec;
mod symlen;
pub mod tol;

pub use angle::{angle_add, angle_negate, zh_sign, AngleClass};
pub use spec::{check_tile_spec, niven, AngleMode, ExactSides, NivenOutcome, SideMode, TileSpec, ValidationReport, GAMMA};
pub(crate) use spec::fmt_f64;
pub use symlen::{parse_rational, EdgeLabel, SymLen};
