use crate::graph::VertexId;
use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed instance text. `line` is 1-based.
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// A vertex number in an instance file is outside `1..=n`.
    #[error("unknown vertex {vertex} at line {line}")]
    UnknownVertex { line: usize, vertex: i64 },

    /// Edge costs must be strictly positive.
    #[error("edge cost must be positive, got {value} at line {line}")]
    NonPositiveCost { line: usize, value: i64 },

    /// The instance graph is not connected.
    #[error("graph is not connected")]
    Disconnected,

    /// A caller violated an operation precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Exact integer arithmetic left the representable range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// The instance is too large for an exhaustive or exact method.
    #[error("{what} limit exceeded: {actual} > {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// A dummy terminal has degree >= 2 in a tree handed to `extract`,
    /// so stripping its edges would disconnect the remainder.
    #[error("dummy vertex {dummy} is not a leaf in the given tree")]
    NonLeafDummy { dummy: VertexId },

    /// A verification campaign aborted at the given instance index.
    #[error("campaign aborted at instance {index}: {source}")]
    Campaign {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
