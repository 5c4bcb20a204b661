use thiserror::Error;

/// Errors raised across the geometry, measure and solver layers.
///
/// Payloads are widened to `f64` so the error type is independent of the
/// scalar the computation ran in.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("directions do not span R^{dim} (rank {rank}); the Wulff body is unbounded")]
    UnboundedBody { dim: usize, rank: usize },
    #[error("degenerate body: volume {volume:e} below threshold")]
    DegenerateBody { volume: f64 },
    #[error("origin is not interior: support value {value:e} at direction {index}")]
    OriginNotInterior { index: usize, value: f64 },
    #[error("singular linear map: |det| = {det:e}")]
    SingularMap { det: f64 },
    #[error("zero direction vector")]
    ZeroDirection,
    #[error("subspaces are not complementary")]
    NotComplementary,
    #[error("lift is degenerate: |det| = {det:e}")]
    LiftDegenerate { det: f64 },
    #[error("invalid direction set: {0}")]
    InvalidDirections(String),
    #[error("invalid support vector: {0}")]
    InvalidSupport(String),
    #[error("invalid subspace: {0}")]
    InvalidSubspace(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("mass must be strictly positive (got {mass:e} at pair {index})")]
    ZeroMass { index: usize, mass: f64 },
    #[error("zero vector at pair {index}")]
    ZeroVector { index: usize },
    #[error("measure is empty")]
    EmptyMeasure,
    #[error("support vector {index} lies outside the subspace (distance {distance:e})")]
    VectorOutsideSubspace { index: usize, distance: f64 },
    #[error("direction {index} of the measure is not present in the direction set")]
    DirectionNotFound { index: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(
        "subspace concentration condition violated on a {dim}-dimensional subspace (mass {mass:e} > bound {bound:e})"
    )]
    ConditionViolated { dim: usize, witness: Vec<Vec<f64>>, mass: f64, bound: f64 },
    #[error("descent diverged after {iterations} iterations (h_max/h_min = {ratio:e}, residual {residual:e})")]
    DivergenceDetected {
        iterations: usize,
        ratio: f64,
        residual: f64,
        /// Most concentrated subspace reported by the checker.
        hint: Vec<Vec<f64>>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
