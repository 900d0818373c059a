use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),
    #[error("vertices must be distinct")]
    VerticesNotDistinct,
    #[error("({u},{v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("cycle length {0} outside supported range 3..=12")]
    CycleLengthOutOfRange(usize),
    #[error("path length {0} outside supported range 1..=8")]
    PathLengthOutOfRange(usize),
    #[error("order {n} too small: {what}")]
    OrderTooSmall { n: usize, what: &'static str },
    #[error("order {n} exceeds internal enumeration cap of {cap}")]
    EnumerationTooLarge { n: usize, cap: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("embedding is inconsistent with the graph: {0}")]
    InconsistentEmbedding(String),
    #[error("path-extension stratum is empty; acyclicity bounds are undefined")]
    EmptyStratum,
    #[error("selector references position {pos} in a class of size {size}")]
    SelectorOutOfRange { pos: usize, size: usize },
    #[error("target edge count {target} infeasible for order {n} (max {max})")]
    InfeasibleEdgeCount { target: usize, n: usize, max: usize },
    #[error("stream contains a graph of order {got}, expected {expected}")]
    MixedOrders { got: usize, expected: usize },
    #[error("graph is not planar")]
    NonPlanarInput,
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("threshold must be at least 1")]
    ZeroThreshold,
}
