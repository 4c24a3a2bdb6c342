use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: malformed header, expected \"<n> <T>\" with n >= 1 and T >= 1")]
    MalformedHeader { line: usize },
    #[error("line {line}: malformed edge line, expected \"<t> <u> <v>\"")]
    MalformedLine { line: usize },
    #[error("line {line}: edge field out of range")]
    EdgeOutOfRange { line: usize },
    #[error("line {line}: self-loop")]
    SelfLoop { line: usize },
    #[error("line {line}: duplicate edge within frame")]
    DuplicateEdge { line: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("frame index {index} out of range (T = {frames})")]
    FrameIndexOutOfRange { index: usize, frames: usize },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("solution set is empty")]
    EmptySolution,
    #[error("objective order k = {k} outside 1..={frames}")]
    KOrderOutOfRange { k: usize, frames: usize },

    #[error("budget exceeded: {what} is {actual}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        actual: u64,
        cap: u64,
    },
    #[error("frame {frame} is disconnected")]
    InfeasibleFrame { frame: usize },
    #[error("instance is uncoverable: {0}")]
    Uncoverable(String),
    #[error("expected a single-frame graph, found {frames} frames")]
    NotSingleFrame { frames: usize },
    #[error("invalid core vector: {0}")]
    InvalidCoreVector(String),

    #[error("MinRep instance has no superedges")]
    NoSuperedges,
    #[error("invalid MinRep instance: {0}")]
    InvalidMinRep(String),
    #[error("input graph is complete")]
    CompleteGraph,
    #[error("hypergraph is not k-uniform with k >= 2")]
    NotUniform,
    #[error("invalid set system: {0}")]
    InvalidSetSystem(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),

    #[error("fractional solution does not match the graph: {0}")]
    DomainMismatch(String),
    #[error("edge ({0}, {1}) is not in the union edge set")]
    EdgeNotInUnion(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
