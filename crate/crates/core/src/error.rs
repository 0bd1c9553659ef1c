use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Graph order or search size over the configured limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// Argument outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition of a construction or search is not met.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// The requested Folkman or Ramsey quantity does not exist for these parameters.
    #[error("nonexistent: {0}")]
    Nonexistent(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A witness or catalog entry failed re-verification.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
