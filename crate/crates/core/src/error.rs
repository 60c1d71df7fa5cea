use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid path spec: {0}")]
    InvalidSpec(String),

    #[error("host has {actual} vertices but at least {required} are needed")]
    HostTooSmall { required: usize, actual: usize },

    #[error("graph has {actual} edges but at least {required} are needed")]
    TooSparse { required: u64, actual: u64 },

    #[error("edge ({0}, {1}) lies inside one bipartition class")]
    NotBipartite(usize, usize),

    #[error("host has {actual} vertices, above the embedding cap of {cap}")]
    SizeLimitExceeded { cap: usize, actual: usize },

    #[error("node budget of {budget} exhausted")]
    ResourceLimit { budget: u64 },

    #[error("no transition inside the window [{lo}, {hi}]")]
    WindowMiss { lo: usize, hi: usize },

    #[error("model does not assign variable {0}")]
    IncompleteModel(usize),

    #[error("decoded coloring is not a witness: {0}")]
    EncodingBug(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
