use alloc::string::String;

use crate::rotation::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degenerate graph: {num_vertices} vertices of degree {degree}")]
    Degenerate { num_vertices: usize, degree: usize },

    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },

    #[error("vertex {vertex} out of range 1..={num_vertices}")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },

    #[error("not a valid rotation map: {0}")]
    InvalidMap(Violation),

    #[error("malformed rotation map: vertex {vertex} appears {count} times in row {row}")]
    MalformedMap { row: usize, vertex: usize, count: usize },

    #[error("malformed adjacency matrix: {0}")]
    MalformedAdjacency(String),

    #[error("graph is not regular: vertex {vertex} has degree {found}, vertex 1 has degree {expected}")]
    NotRegular { vertex: usize, expected: usize, found: usize },

    #[error("unsupported degree {degree}: {reason}")]
    UnsupportedDegree { degree: usize, reason: &'static str },

    #[error("invalid {family} parameters: {constraint}")]
    Parameter { family: &'static str, constraint: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
}
