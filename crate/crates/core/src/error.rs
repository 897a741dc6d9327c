use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("coloring has length {got}, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("improper coloring: edge {{{0}, {1}}} joins vertices of equal color")]
    ImproperColoring(usize, usize),
    #[error("instance has {n} vertices, search limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no up-color dominating set exists: {0}")]
    Infeasible(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("vertex set is not a dominating set (vertex {0} undominated)")]
    NotDominating(usize),
    #[error("base coloring is not proper on edge {{{0}, {1}}}")]
    ImproperBase(usize, usize),
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("subset collection is empty")]
    EmptyCollection,
    #[error("formula has no variables")]
    EmptyFormula,
    #[error("invalid clause {index}: {reason}")]
    InvalidClause { index: usize, reason: String },
    #[error("instance is not balanced: variable {0} occurs unequally often affirmed and negated")]
    NotBalanced(usize),
    #[error("variable {variable} has {count} occurrences per sign, gadget capacity is {capacity}")]
    TooManyOccurrences {
        variable: usize,
        count: usize,
        capacity: usize,
    },
    #[error("assignment has length {got}, instance has {expected} variables")]
    BadAssignmentLength { expected: usize, got: usize },
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
