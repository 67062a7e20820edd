use thiserror::Error;

/// Errors reported by graph construction, argument validation, and the
/// capacity caps on exhaustive searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("({0},{1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("set is not independent: contains edge ({0},{1})")]
    NotIndependent(usize, usize),

    #[error("not a bipartition: {0}")]
    NotBipartition(String),

    #[error("invalid family parameters: {0}")]
    Family(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{what} supports n <= {cap}, got n = {n}")]
    Capacity {
        what: &'static str,
        cap: usize,
        n: usize,
    },

    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("{path}:{line}: {source}")]
    Stream {
        path: String,
        line: usize,
        source: Graph6Error,
    },

    #[error("io: {0}")]
    Io(String),
}

/// Parse and encode errors for the graph6 text format. Offsets are byte
/// positions within the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,

    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 0x3f..=0x7e")]
    InvalidByte { byte: u8, offset: usize },

    #[error("long form (n >= 63) is not supported (offset {offset})")]
    UnsupportedSize { offset: usize },

    #[error("truncated: expected {expected} data bytes after the header, found {found}")]
    Truncated { expected: usize, found: usize },

    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },

    #[error("nonzero padding bits in final data byte at offset {offset}")]
    BadPadding { offset: usize },
}
