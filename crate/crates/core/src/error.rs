use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph order must be at least 1")]
    EmptyGraph,
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex selection is empty")]
    EmptySelection,
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("{what} must be at least {min}, got {value}")]
    TooSmall {
        what: &'static str,
        value: u64,
        min: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("primes must be distinct, got {0} twice")]
    EqualPrimes(u64),
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),
    #[error("base graph has {base} vertices but {components} components were given")]
    Arity { base: usize, components: usize },
    #[error("join component {0} is disconnected")]
    DisconnectedComponent(usize),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
