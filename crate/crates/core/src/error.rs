use thiserror::Error;

use crate::graph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("more than the declared {0} edges")]
    TooManyEdges(usize),
    #[error("expected {expected} edges, found {found}")]
    TooFewEdges { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Which exhaustive-search limit was hit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BudgetError {
    #[error("{actual} vertices exceed the oracle budget of {limit}")]
    Vertices { actual: usize, limit: usize },
    #[error("{actual} edges exceed the oracle budget of {limit}")]
    Edges { actual: usize, limit: usize },
    #[error("enumeration exceeded the budget of {limit} candidates")]
    Subsets { limit: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) is not an edge of the parent graph")]
    EdgeNotInParent(Vertex, Vertex),
    #[error("edge ({0}, {1}) already exists")]
    EdgeAlreadyPresent(Vertex, Vertex),
    #[error("graph is not a DD2-graph")]
    NotDd2,
    #[error("graph is already a DD2-graph")]
    AlreadyDd2,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("graph is not 3-regular")]
    NotCubic,
    #[error("vertex set is not a connected component")]
    NotAComponent,
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

impl Error {
    /// Budget failures are distinguished from precondition failures by callers
    /// that map errors onto exit codes.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
