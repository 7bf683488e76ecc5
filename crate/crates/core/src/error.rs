use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph spec parse error: {0}")]
    Parse(String),

    #[error("instance too large: {what} is {actual}, limit {limit}")]
    SizeLimit {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid source sequence: vertex {vertex} is already burned at round {round}")]
    SourceAlreadyBurned { vertex: usize, round: u32 },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("game over")]
    GameOver,

    #[error("unsolved within budget after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
