use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("set mismatch: {0}")]
    SetMismatch(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("empty set where a non-void value is required: {0}")]
    EmptySet(String),

    #[error("cannot parse chord `{input}`: unexpected `{token}`")]
    ChordParse { input: String, token: String },

    #[error("cannot parse word `{input}`: {reason}")]
    WordParse { input: String, reason: String },

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("unknown preset `{0}` (expected one of upl, s, t, st, ti)")]
    UnknownPreset(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("structural mismatch: {0}")]
    Structure(String),

    #[error("search budget exceeded: {candidates} candidates > bound {bound}")]
    BudgetExceeded { candidates: u128, bound: u128 },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
