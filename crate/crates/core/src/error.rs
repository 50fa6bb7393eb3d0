use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidFamilyParams { family: String, reason: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex index {index} out of range for graph with {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("no edge {0}-{1}")]
    NoSuchEdge(usize, usize),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("graph has {0} vertices; at least 2 required")]
    GraphTooSmall(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not {0}-regular")]
    NotRegular(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("tree is a star")]
    IsAStar,

    #[error("graph too small: {0}")]
    TooSmall(String),

    #[error("{id} is not defined for parameters {params:?} (requires {validity})")]
    OutOfValidityDomain {
        id: String,
        params: Vec<u64>,
        validity: String,
    },

    #[error("random generation did not converge after {0} attempts")]
    GenerationFailed(usize),

    #[error("i/o: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
