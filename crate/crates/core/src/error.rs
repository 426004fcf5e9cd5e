use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum SpecError {
    #[error("invalid tile spec: {0}")]
    InvalidSpec(String),
    #[error("cannot parse tile spec: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum TilingError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("tiles {0} and {1} overlap")]
    Overlap(usize, usize),
    #[error("coverage error: {0}")]
    Coverage(String),
    #[error("dangling edge: {0}")]
    DanglingEdge(String),
    #[error("snap ambiguity near ({x:.12}, {y:.12}): point is within the snap radius of two distinct vertices")]
    SnapAmbiguity { x: f64, y: f64 },
    #[error("tile {0} is not counterclockwise")]
    Orientation(usize),
    #[error("tile {0} is mirrored but only direct copies are allowed")]
    MirroredNotAllowed(usize),
    #[error("boundary is not a simple counterclockwise polygon: {0}")]
    NonSimpleBoundary(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("malformed tiling: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("vertex {vertex} with angle counts (α,β,γ)=({}, {}, {}) matches no vertex type", counts[0], counts[1], counts[2])]
    Classification { vertex: usize, counts: [usize; 3] },
    #[error("relations admit no positive solution for (a, b, c)")]
    InconsistentRelations,
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("no boundary segment can anchor the reference frame: {0}")]
    Frame(String),
    #[error("not a kite or parallelogram: {0}")]
    NotAKiteOrParallelogram(String),
    #[error("boundary is not all c-edges: {0}")]
    BoundaryNotAllC(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("node budget of {budget} exceeded before the search completed")]
    ResourceLimit { budget: u64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Tiling(#[from] TilingError),
}
