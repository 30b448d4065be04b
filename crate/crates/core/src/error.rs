use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("negative input {0} has no integer square root")]
    NegativeInput(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the zero vector has no direction")]
    ZeroVector,

    #[error("zero has no multiplicative inverse")]
    DivisionByZero,

    #[error("invalid sphere point: {0}")]
    InvalidSpherePoint(String),

    #[error("x·u = v·u is not a circle when u = -v")]
    AntipodalCircle,

    #[error("colour index {colour} at vertex {vertex} is outside the palette of size {palette}")]
    ColourOutOfRange {
        vertex: usize,
        colour: usize,
        palette: usize,
    },

    #[error("colouring covers {got} vertices but the graph has {expected}")]
    ColouringLength { expected: usize, got: usize },

    #[error(
        "graph with {vertices} vertices is too large for exact solve (cap {cap}); \
         bounds {lower} <= chi <= {upper}"
    )]
    TooLarge {
        vertices: usize,
        cap: usize,
        lower: usize,
        upper: usize,
    },

    #[error("vertex index {index} out of range for {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("norm tolerance violated: |v| = {norm} is below 10·tol = {limit}")]
    NormBelowTolerance { norm: f64, limit: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
