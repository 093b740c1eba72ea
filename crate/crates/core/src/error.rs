use std::fmt;

use crate::graph::Vertex;

/// A precondition of a bound-specific operation that the input graph
/// does not meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    Connected,
    Bipartite,
    TwoConnected,
    /// At least this many vertices.
    MinVertices(usize),
    /// m ≥ n.
    EdgesAtLeastVertices,
    HasCycle,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Connected => f.write_str("connected"),
            Hypothesis::Bipartite => f.write_str("bipartite"),
            Hypothesis::TwoConnected => f.write_str("2-connected"),
            Hypothesis::MinVertices(k) => write!(f, "n ≥ {k}"),
            Hypothesis::EdgesAtLeastVertices => f.write_str("m ≥ n"),
            Hypothesis::HasCycle => f.write_str("contains a cycle"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("pair vertices must be distinct (got {0} twice)")]
    SamePairVertex(Vertex),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{0} violated")]
    Hypothesis(Hypothesis),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("{what} of size {n} exceeds the supported limit {limit}")]
    OverLimit { what: &'static str, n: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
