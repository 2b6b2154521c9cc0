use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VertexId),
    #[error("invalid vertex identifier `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidVertexId(String),
    #[error("invalid bundle identifier `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidBundleId(String),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(VertexId),
    #[error("bundle `{0}` declared twice")]
    DuplicateBundle(String),
    #[error("invalid edge reference {0}")]
    InvalidEdge(String),
    #[error("vertex `{vertex}` emits uncountably many edges; at most {bound} can be sampled, {requested} requested")]
    NonEnumerable {
        vertex: VertexId,
        requested: usize,
        bound: usize,
    },
    #[error("graph has {0} vertices, isomorphism search is limited to {max}", max = crate::iso::MAX_ISO_VERTICES)]
    TooLarge(usize),
    #[error("graph is not finite (tails or infinite bundles present)")]
    NotFinite,
    #[error("graph contains an uncountable bundle ({0})")]
    HasUncountable(String),
    #[error("vertex `{0}` is not a sink")]
    NotASink(VertexId),
    #[error("vertex `{0}` is not a countably infinite emitter")]
    NotACountableEmitter(VertexId),
    #[error("vertex `{0}` already carries a tail")]
    AlreadyTailed(VertexId),
    #[error("tail prefix `{0}` is already in use")]
    TailPrefixInUse(String),
    #[error("edge order policy rejected at `{vertex}`: {reason}")]
    InvalidPolicy { vertex: VertexId, reason: String },
    #[error("graph has no text form: {0}")]
    Unserializable(String),
    #[error("unknown edge order policy `{0}`")]
    UnknownPolicy(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("vertex `{vertex}` emits fewer than {requested} edges")]
    NotEnoughEdges { vertex: VertexId, requested: usize },
    #[error("vertex `{0}` emits infinitely many edges within the requested path length")]
    NotLocallyRowFinite(VertexId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("graph is not finite (tails or infinite bundles present)")]
    NotFinite,
    #[error("malformed tail truncation: {0}")]
    MalformedTail(String),
    #[error("invalid monoid vector: {0}")]
    InvalidVector(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Text-format errors. Every variant carries a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: bundle `{bundle}` declared twice")]
    DuplicateBundle {
        line: usize,
        column: usize,
        bundle: String,
    },
    #[error("{line}:{column}: vertex `{vertex}` declared twice")]
    DuplicateVertex {
        line: usize,
        column: usize,
        vertex: String,
    },
    #[error("{line}:{column}: bad multiplicity `{text}` (expected a positive integer, omega or uncountable)")]
    BadMultiplicity {
        line: usize,
        column: usize,
        text: String,
    },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match self {
            ParseError::Syntax { line, column, .. }
            | ParseError::DuplicateBundle { line, column, .. }
            | ParseError::DuplicateVertex { line, column, .. }
            | ParseError::BadMultiplicity { line, column, .. } => (*line, *column),
        }
    }
}
