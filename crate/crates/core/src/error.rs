use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The series does not converge for the supplied exponents.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// A content index referenced by a shape or expression has no value.
    #[error("no value assigned to z_{0}")]
    Unassigned(i64),

    /// Exact arithmetic was requested for an input it cannot represent.
    #[error("exact mode unsupported: {0}")]
    NotExact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
