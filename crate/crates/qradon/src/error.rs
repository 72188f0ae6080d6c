use thiserror::Error;

/// Crate-wide error type. Variants map onto the failure modes of the
/// geometric constructors, the samplers and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta:e}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },

    #[error("matrix is numerically singular: eigenvalue {value:e} within tolerance {tol:e} of zero")]
    Singular { value: f64, tol: f64 },

    #[error("invalid surface domain: {0}")]
    BadDomain(String),

    #[error("unknown surface kind `{0}`")]
    UnknownKind(String),

    #[error("no point of the integration surface found in the search region")]
    EmptySurface,

    #[error("level set does not intersect the requested region")]
    EmptyIntersection,

    #[error("level set is unbounded; a bounding box is required")]
    UnboundedWithoutBox,

    #[error("point is not on the rank-drop surface: |K| = {k:e} exceeds tolerance {tol:e}")]
    NotOnSigma { k: f64, tol: f64 },

    #[error("no rank-drop points found in the search region")]
    NoneFound,

    #[error("tau must be nonzero to invert the left projection")]
    ZeroTau,

    #[error("no fiber solution: {0}")]
    NoSolution(String),

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid config field `{field}`: {message}")]
    Validation { field: String, message: String },

    #[error("non-finite value in output: {0}")]
    NonFinite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 = config, 2 = domain, 3 = I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Validation { .. } => 1,
            Error::Io(_) | Error::NonFinite(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
