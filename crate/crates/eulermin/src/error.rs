use thiserror::Error;

/// Crate-wide error type. The CLI maps these onto stable exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed graph line: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("loop edge {{{u},{u}}} is not allowed in a simple graph")]
    LoopEdge { u: usize },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex index {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph has {s} edges, more than the supported maximum of 64")]
    TooManyEdges { s: usize },
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error("no ({t:?},{p})-join exists")]
    NoJoinExists { t: Vec<usize>, p: u8 },
    #[error("joins do not all share one (T,p) classification")]
    MixedPairs,
    #[error("{what} is {value}, exceeding the cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the ideal is trivial: the graph has fewer than two edges")]
    TooFewEdges,
    #[error("binomial is not a member of the ideal")]
    NotAMember,
    #[error("the two sides of a binomial must differ")]
    DegenerateBinomial,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("malformed binomial: {0}")]
    MalformedBinomial(String),
    #[error("edge {{{u},{v}}} is not an edge of the graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}
