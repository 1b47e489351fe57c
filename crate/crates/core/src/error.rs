use thiserror::Error;

use crate::graph::EdgeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid spin action: {0}")]
    InvalidAction(String),
    #[error("{what} is {value}, which exceeds the configured bound {limit}")]
    BoundExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("spin actions or graphs are over different groups")]
    GroupMismatch,
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("edge {0} does not exist")]
    MissingEdge(EdgeId),
    #[error("vertex {vertex} is not an endpoint of edge {edge}")]
    NotAnEndpoint { edge: EdgeId, vertex: usize },
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("group element {0} is out of range")]
    InvalidElement(usize),
    #[error("spin {0} is out of range")]
    InvalidSpin(usize),
    #[error("edge {0} is a loop; loops cannot be contracted")]
    LoopContraction(EdgeId),
    #[error("malformed walk: {0}")]
    MalformedWalk(String),
    #[error("edge set is not connected")]
    NotConnected,
    #[error("invalid forest: {0}")]
    InvalidForest(String),
    #[error("the spin set is empty but the graph has balanced components")]
    EmptySpinSet,
    #[error("interpolated polynomial has a non-integral coefficient")]
    NonIntegral,
    #[error("interpolation nodes must be distinct")]
    RepeatedNode,
    #[error("the Potts encoding needs a group with at least two elements")]
    TrivialGroup,
    #[error("{what}: {left} != {right}")]
    OracleMismatch {
        what: &'static str,
        left: String,
        right: String,
    },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn bound(what: &'static str, value: u128, limit: u128) -> Error {
        Error::BoundExceeded { what, value, limit }
    }
}
