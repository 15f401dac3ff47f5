use thiserror::Error;

/// Errors produced by geometry construction, potential evaluation and the
/// discrete solver.
#[derive(Debug, Error)]
pub enum FluxgapError {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("point ({x}, {y}) lies outside the domain")]
    PointOutsideDomain { x: f64, y: f64 },

    #[error("flux count mismatch: domain has {expected} holes+punctures, got {got} fluxes")]
    FluxCountMismatch { expected: usize, got: usize },

    #[error("segment passes within {dist:.3e} of a pole at ({x}, {y})")]
    PoleOnSegment { x: f64, y: f64, dist: f64 },

    #[error("normal ray from ({x}, {y}) failed to hit the outer boundary")]
    RayMiss { x: f64, y: f64 },

    #[error("discretization produced an empty vertex mask")]
    EmptyMask,

    #[error("trial field is identically zero on the active mask")]
    ZeroField,

    #[error("degenerate cut: segment length {len} is not in (0, 1)")]
    DegenerateCut { len: f64 },

    #[error("cut segment endpoint ({x}, {y}) touches no boundary component")]
    DanglingCutEndpoint { x: f64, y: f64 },

    #[error("cut segment exits the domain near ({x}, {y})")]
    CutExitsDomain { x: f64, y: f64 },

    #[error("no admissible cut found: {0}")]
    NoAdmissibleCut(String),

    #[error("epsilon-net is empty: epsilon {epsilon} admits no point in the domain")]
    EmptyNet { epsilon: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, FluxgapError>;
