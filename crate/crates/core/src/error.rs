use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid biclique: {0}")]
    InvalidBiclique(String),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("improper coloring: {0}")]
    ImproperColoring(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("instance too large: {0}")]
    SizeGuard(String),
    #[error("graph contains K_{{{i},{j}}} as a subgraph")]
    NotKijFree { i: usize, j: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
