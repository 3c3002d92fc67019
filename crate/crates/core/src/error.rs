use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroColumns,

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected} points, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid boundary word: {0}")]
    InvalidWord(String),

    #[error("invalid fork diagram: {0}")]
    InvalidDiagram(String),

    #[error("arcs {0} and {1} have no counted crossing")]
    NoCrossing(usize, usize),

    #[error("generator s_{index} out of range for {points} boundary points")]
    GeneratorOutOfRange { index: usize, points: usize },

    #[error("invalid web: {0}")]
    InvalidWeb(String),

    #[error("vertex {0} is not a crossing")]
    NotACrossing(usize),

    #[error("incompatible orientation pattern at crossing {0}")]
    CrossingOrientation(usize),

    #[error("web still contains crossings")]
    HasCrossings,

    #[error("{0} is not in the basis")]
    NotInBasis(String),

    #[error("unknown basis {0:?}, expected P, M or W")]
    UnknownBasis(String),

    #[error("n = {n} exceeds the configured limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("non-integral coefficient in basis conversion")]
    NonIntegral,

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
