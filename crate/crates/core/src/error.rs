use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph capacity exceeded: {0} vertices (max {MAX_VERTICES})")]
    Capacity(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("edge {0}-{1} already present")]
    EdgePresent(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeAbsent(usize, usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("terminal set: {0}")]
    Terminals(String),
    #[error("unsupported terminal set size {0} (only 2 and 3 are supported)")]
    UnsupportedK(usize),
    #[error("k = {k} exceeds graph order {n}")]
    KExceedsOrder { k: usize, n: usize },
    #[error("x and y must be distinct (got {0})")]
    SameEndpoints(usize),
    #[error("order {n} too large for this operation (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("invalid query: {0}")]
    InvalidQuery(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("vertex {0} is already an attaching vertex")]
    AlreadyAttached(usize),
    #[error("cache conflict for {key}: stored {stored}, new {new}")]
    CacheConflict { key: String, stored: u32, new: u32 },
    #[error("cache file line {line}: {msg}")]
    CacheFormat { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("missing catalog for order {0}")]
    MissingCatalog(usize),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
