use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ground sets differ: {left} vs {right} points")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("vertex {vertex} out of range for ground set of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("partial map is not injective: {a} and {b} both map to {image}")]
    NotInjective { a: usize, b: usize, image: usize },

    #[error("generator `{name}` is not a bijection of the ground set")]
    NotBijective { name: String },

    #[error("relation is not symmetric: ({x}, {y}) present without its inverse")]
    NotSymmetric { x: usize, y: usize },

    #[error("relation is missing diagonal pair ({x}, {x})")]
    MissingDiagonal { x: usize },

    #[error("component {index} is disconnected")]
    DisconnectedComponent { index: usize },

    #[error("component {index} is not regular (degrees {min}..{max})")]
    NotRegular {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("blocks {first} and {second} overlap at vertex {vertex}")]
    OverlappingBlocks {
        first: usize,
        second: usize,
        vertex: usize,
    },

    #[error("block {index} is not positive semidefinite (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { index: usize, min_eigenvalue: f64 },

    #[error("block {index} is not hermitian (asymmetry {asymmetry:e})")]
    NotHermitian { index: usize, asymmetry: f64 },

    #[error("block {index} has operator norm {norm}, expected 1")]
    BadNormalization { index: usize, norm: f64 },

    #[error("degenerate top eigenspace (gap {gap:e}): no nonnegative eigenvector, residual {residual:e}")]
    DegenerateEigenspace { gap: f64, residual: f64 },

    #[error("propagation {actual} exceeds the allowed radius {allowed}")]
    PropagationExceeded { actual: String, allowed: usize },

    #[error("not a probability measure: {reason}")]
    InvalidMeasure { reason: String },

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("construction failed: {0}")]
    Construction(String),
}
