use thiserror::Error;

/// Errors raised while decoding a graph6 line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("graph6 body has {found} bytes, expected {expected} for n = {n}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("graph order {0} exceeds the supported maximum of 64")]
    TooLarge(usize),
    #[error("graph6 encodes a graph with zero vertices")]
    ZeroOrder,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("graph order {0} is outside 1..=64")]
    InvalidOrder(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("operation requires {what}, got {got}")]
    OutOfRange { what: &'static str, got: usize },
    #[error("zero polynomial has no square-free decomposition")]
    ZeroPolynomial,
    #[error("interval endpoint {0} is a root; nudge the endpoint and retry")]
    EndpointIsRoot(String),
    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("vertex set is not a twin clique: {0}")]
    NotTwinClique(String),
    #[error("embedding does not match pattern {0}")]
    PatternMismatch(&'static str),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("catalog fixture is malformed: {0}")]
    Catalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
