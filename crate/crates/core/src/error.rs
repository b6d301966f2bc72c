use thiserror::Error;

/// Errors raised by the geometric and lattice routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix has non-integer entries")]
    NonInteger,

    #[error("zero vector has no primitive representative")]
    ZeroVector,

    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("sigma must be pointed")]
    NotPointed,

    #[error("sigma must be full-dimensional")]
    NotFullDimensional,

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("polyhedron is unbounded")]
    Unbounded,

    #[error("character {0} is not in the weight cone")]
    NotInWeightCone(String),

    #[error("cone is not a GIT cone meeting the relative interior of the weight cone")]
    NotInQ0,

    #[error("enumeration bound must be at least 1, got {0}")]
    InvalidBound(u64),

    #[error("map is not a lattice section of the quotient map")]
    NotASection,

    #[error("map is not surjective")]
    NotSurjective,

    #[error("fans are not compatible under the given map")]
    Incompatible,

    #[error("malformed fan: {0}")]
    MalformedFan(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
