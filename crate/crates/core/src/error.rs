use std::path::PathBuf;

/// Errors produced by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Parameters outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient sequence that was required to be nonnegative is not.
    #[error("negative coefficient at index {index}")]
    NonnegativityViolation { index: usize },

    /// A list of polynomials that was required to be independent is not.
    #[error("vector {index} is a linear combination of the preceding vectors")]
    Dependent { index: usize },

    /// A proved statement failed on a concrete instance. Always an
    /// implementation bug.
    #[error("verification failed for {family} {params:?}: {check} (witness index {witness:?})")]
    Verification {
        family: String,
        params: Vec<u64>,
        check: String,
        witness: Option<usize>,
    },

    #[error("kernel size {kernel} differs from delta {delta} at (n, k, m) = ({n}, {k}, {m})")]
    DimensionMismatch {
        n: u32,
        k: u32,
        m: u64,
        kernel: usize,
        delta: String,
    },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
