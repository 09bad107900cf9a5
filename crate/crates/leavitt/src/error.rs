use thiserror::Error;

use crate::graph::VertexId;

/// Crate-wide error type. Variants with a `Parse` flavor indicate malformed
/// textual input; everything else is a domain precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid label {0:?}: labels must be nonempty and free of whitespace, ',', ':' and '|'")]
    InvalidToken(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("duplicate edge id {0}")]
    DuplicateEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("vertex set is not hereditary: {0} reaches outside the set")]
    NotHereditary(VertexId),
    #[error("not a subgraph: {0}")]
    NotSubgraph(String),
    #[error("vertex {0} is not a source")]
    NotASource(VertexId),
    #[error("move (R) is not applicable at {vertex}: {reason}")]
    MoveRNotApplicable { vertex: VertexId, reason: String },
    #[error("vertex {0} is the base of a loop")]
    LoopAtVertex(VertexId),
    #[error("vertex {0} is a sink")]
    SinkVertex(VertexId),
    #[error("vertex {0} is a source")]
    SourceVertex(VertexId),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("bad hair specification: {0}")]
    BadSpec(String),
    #[error("move kind {0} does not induce a class map")]
    UnsupportedMoveKind(String),
    #[error("class is zero")]
    ZeroClass,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("class vanished during corner computation")]
    ClassVanished,
    #[error("graph mismatch: {0}")]
    GraphMismatch(String),
    #[error("element does not lie in the requested corner")]
    NotInCorner,
    #[error("bad path: {0}")]
    BadPath(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by malformed textual input rather than by a
    /// well-formed request that violates a domain precondition.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidToken(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
