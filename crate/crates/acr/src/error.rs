use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size cap was exceeded (vertex capacity, subset-sweep cap, search cap).
    #[error("capacity exceeded in {what}: got {got}, limit {limit}")]
    Capacity {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    /// An invalid family/parameter combination or malformed argument.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// Malformed textual input; `offset` is the byte position of the defect.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// A precondition on the mathematical domain was violated
    /// (non-edge pivot, overlapping bipartition, non-forest quotient, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An internal cross-check failed; carries a certificate of the failure.
    #[error("integrity check failed: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Parameter(_) => 2,
            Error::Capacity { .. } => 3,
            Error::Domain(_) | Error::Integrity(_) => 1,
        }
    }
}

/// Outcome of a computation that a search cap may have truncated.
///
/// Caps never produce a wrong answer; they produce `Indeterminate`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tri {
    True,
    False,
    Indeterminate,
}

impl Tri {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Tri::True
        } else {
            Tri::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Tri::True
    }

    pub fn is_indeterminate(self) -> bool {
        self == Tri::Indeterminate
    }
}

impl std::fmt::Display for Tri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tri::True => write!(f, "true"),
            Tri::False => write!(f, "false"),
            Tri::Indeterminate => write!(f, "indeterminate"),
        }
    }
}
