//! Tilings of polygons by copies of a triangle with one angle equal to 2π/3.
//!
//! The crate validates tilings, extracts their planar structure, runs the
//! arithmetic analyses (vertex census, segment relations, Γ-graphs), computes the
//! signed edge invariant, generates standard constructions, and enumerates tilings
//! of small regions.

pub mod analysis;
pub mod error;
pub mod exact;
pub mod generators;
pub mod invariant;
pub mod geometry;
pub mod model;
pub mod render;
pub mod search;

pub use error::{AnalysisError, InvariantError, SearchError, SpecError, TilingError};
