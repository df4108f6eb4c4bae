use thiserror::Error;

use crate::kalmanson::CharacterizationReport;
use crate::network::{EdgeId, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("network is not connected over positive-conductance edges")]
    DisconnectedNetwork,

    #[error("expected a boundary vector with {expected} entries, got {found}")]
    BoundarySize { expected: usize, found: usize },

    #[error("size limit exceeded: {what} is {actual}, cap is {limit}")]
    SizeLimitExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("vertex {vertex} is not eligible: {reason}")]
    NotEligible { vertex: VertexId, reason: String },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is too small: n = {0}, need n >= 2")]
    TooSmall(usize),

    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("matrix has a nonzero diagonal entry at ({i}, {i})")]
    NonzeroDiagonal { i: usize },

    #[error("row space rank is {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("network has no rotation system")]
    MissingRotation,

    #[error("column {column} of the omega matrix is zero")]
    ZeroColumn { column: usize },

    #[error("column {column} is not in the span of the remaining columns")]
    Unspanned { column: usize },

    #[error("not a fixed-point-free involution: {0}")]
    NotInvolution(String),

    #[error("boundary vertices {first} and {second} fall into the same face")]
    MergedBoundary { first: VertexId, second: VertexId },

    #[error("round trip failed: expected {expected}, traced {found}")]
    RoundTripFailure { expected: String, found: String },

    #[error("matrix is not the resistance matrix of a circular network")]
    NotElectrical(Box<CharacterizationReport>),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("edge {0} does not exist")]
    UnknownEdge(EdgeId),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
