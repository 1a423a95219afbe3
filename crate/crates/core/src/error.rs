use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no ear exists: the subgraph already contains every edge")]
    NoEar,

    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExhausted { budget: u64 },

    #[error("instance with {n} vertices exceeds the oracle limit of {max}")]
    OverBudget { n: usize, max: usize },

    #[error("construction failed verification at pair ({0}, {1})")]
    ConstructionFailed(Vertex, Vertex),
}
