use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("malformed graph6 line: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("input too large: {what} = {value} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("graph too small: {0}")]
    TooSmall(&'static str),
    #[error("endpoints must be distinct (got {0} twice)")]
    SameVertex(usize),
    #[error("vertex sequence is not a simple path of the graph")]
    NotAPath,
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph has a bridge {0:?}")]
    HasBridge((usize, usize)),
    #[error("edge {0:?} is not a bridge of the composite graph")]
    NotABridge((usize, usize)),
    #[error("embedding does not describe a bridge gluing: {0}")]
    BadEmbedding(&'static str),
    #[error("palettes cannot be aligned across the bridge")]
    PaletteAlignmentImpossible,
    #[error("constructed coloring failed verification: {0}")]
    VerificationFailed(String),
    #[error("new vertex has degree {0}, at least 2 required")]
    DegreeTooLow(usize),
    #[error("bounded search exhausted without a verified coloring")]
    VerificationExhausted,
    #[error("new vertex {0} is isolated")]
    IsolatedNewVertex(usize),
    #[error("base certificate does not carry the strong property")]
    RequiresStrongProperty,
    #[error("invalid partition: {0}")]
    BadPartition(&'static str),
    #[error("search budget exceeded; pc lies in [{lower}, {upper}]")]
    SearchBudgetExceeded { lower: usize, upper: usize },
    #[error("exceptional-graph fixtures are missing")]
    FixturesMissing,
    #[error("coloring does not match graph: {0}")]
    ColoringGraphMismatch(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("certificate precondition failed: {0}")]
    BadCertificate(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::TooLarge { what, value, limit })
    } else {
        Ok(())
    }
}
