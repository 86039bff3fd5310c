use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data (bad lengths, non-bijections, bad JSON shape).
    #[error("invalid input: {0}")]
    Input(String),

    /// An operation that needs a valid flag system was handed one that fails
    /// the monodromy axioms (or strict simplicity, where required).
    #[error("flag system violates its axioms: {0}")]
    InvalidFlagSystem(String),

    #[error("colour {0} out of range, expected 0, 1 or 2")]
    BadColour(u8),

    #[error("expected a 4-orbit map, found k = {k}")]
    WrongOrbitCount { k: usize },

    #[error("pregraph is not isomorphic to any {family} type graph")]
    NotATypeGraph { family: &'static str },

    #[error("cannot build map: edge {u}-{v}: {reason}")]
    Construction { u: usize, v: usize, reason: String },

    #[error("size {size} exceeds the supported maximum of {cap}")]
    UnsupportedSize { size: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Short machine-readable tag, used by the CLI's JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::InvalidFlagSystem(_) => "invalid-flag-system",
            Error::BadColour(_) => "bad-colour",
            Error::WrongOrbitCount { .. } => "wrong-orbit-count",
            Error::NotATypeGraph { .. } => "not-a-type-graph",
            Error::Construction { .. } => "construction",
            Error::UnsupportedSize { .. } => "unsupported-size",
            Error::Internal(_) => "internal",
            Error::Json(_) => "json",
        }
    }
}
