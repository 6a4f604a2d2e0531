use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty hypergraph")]
    EmptyHypergraph,

    #[error("hyperedge {index} has no members")]
    EmptyEdge { index: usize },

    #[error("node id {id} out of range for a hypergraph with {nodes} nodes")]
    InvalidNode { id: u32, nodes: usize },

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("no nodes after preprocessing")]
    NothingLeft,

    #[error("a triple needs three distinct nodes, got {0}")]
    BadTriple(usize),

    #[error("cannot draw {requested} distinct hyperedges: only {available} exist for the given sizes")]
    Infeasible { requested: usize, available: u128 },

    #[error("invalid random hypergraph spec: {0}")]
    BadSpec(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },

    #[error("bin count must be at least 1")]
    ZeroBins,

    #[error("value {0} lies outside [0, 1]")]
    OutOfUnitRange(f64),
}

impl Error {
    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line,
            message: message.into(),
        }
    }

    /// True for errors caused by malformed or unreadable input data.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io { .. })
    }
}
