use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{family}({param}) is undefined: parameter must be at least {min}")]
    FamilyParameter {
        family: &'static str,
        param: usize,
        min: usize,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("vertex count overflow: {0} x {1}")]
    SizeOverflow(usize, usize),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("labeling has {got} entries, graph has {expected} vertices")]
    LabelingLength { expected: usize, got: usize },

    #[error("edge labeling does not match the edge set: {0}")]
    EdgeLabelingDomain(String),

    #[error("labels must be positive integers")]
    ZeroLabel,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{0} labeling is not distinguishing")]
    NotDistinguishing(&'static str),
}
