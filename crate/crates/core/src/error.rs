use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DomError {
    #[error("vertex index {index} out of range for a graph of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph of order {order} exceeds the vertex tier limit {limit}")]
    TierExceeded { order: usize, limit: usize },
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("host graph is disconnected")]
    DisconnectedHost,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(usize, usize),
    #[error("graph is not a cactus")]
    NotACactus,
    #[error("graph has girth {0}, below 7")]
    GirthTooSmall(u32),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("spanning tree count exceeds cap {0}")]
    TreeCountCapExceeded(u64),
    #[error("cycle enumeration exceeds cap {0}")]
    CycleCapExceeded(u64),
    #[error("unknown solver `{0}`")]
    UnknownSolver(String),
    #[error("solver `{solver}` does not support {kind}")]
    UnsupportedKind { solver: String, kind: String },
    #[error("unknown theorem id `{0}`")]
    UnknownTheoremId(String),
    #[error("corpus read error: {0}")]
    CorpusRead(String),
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = DomError> = std::result::Result<T, E>;
