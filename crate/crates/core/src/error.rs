use thiserror::Error;

use crate::monomial::GenericityWitness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension must be at least 1")]
    ZeroDimension,

    #[error("an ideal needs at least one generator")]
    EmptyIdeal,

    #[error("ideal is not Artinian: no pure power of x{0}")]
    NotArtinian(usize),

    #[error("ideal is not generic: {0}")]
    NotGeneric(GenericityWitness),

    #[error("lattice scan of {cells} cells exceeds the limit of {limit} (set SCARF_MAX_BOX to raise it)")]
    ScanLimit { cells: u128, limit: u128 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("face is not top-dimensional: {vertices} vertices in dimension {n}")]
    NotTopFace { vertices: usize, n: usize },

    #[error("x{variable}-vertex of face {face:?} is not unique ({count} candidates)")]
    AmbiguousVertex {
        face: Vec<usize>,
        variable: usize,
        count: usize,
    },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("resolution has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("oracle limited to {max} generators, got {found}")]
    TooManyGenerators { found: usize, max: usize },

    #[error("cannot orient top cells: {0}")]
    Orientation(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
