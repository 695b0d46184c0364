use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid cut: {0}")]
    InvalidCut(String),
    /// `s` and `t` are adjacent, so no vertex set can separate them.
    #[error("s and t are adjacent; no vertex cut exists")]
    NoVertexCut,
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("invalid constraint problem: {0}")]
    InvalidCsp(String),
    #[error("decomposition does not match constraint graph: {0}")]
    DecompositionMismatch(String),
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    /// A dynamic-programming table would exceed the configured entry budget.
    #[error("table of {needed} entries exceeds budget of {budget}")]
    ResourceExceeded { needed: u128, budget: u64 },
    /// Exhaustive enumeration would exceed the configured budget.
    #[error("enumeration of {needed} candidates exceeds budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    /// The brute-force oracle found no cut within its size budget.
    #[error("no feasible cut with at most {max_size} members")]
    OracleUnknown { max_size: usize },
    #[error("no assignment satisfies the hard constraints")]
    Infeasible,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("usage: {0}")]
    Usage(String),
    /// A solver produced a result that failed independent verification.
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
