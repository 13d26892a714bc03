use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeter(String),

    #[error("unknown Coxeter preset {0:?}")]
    UnknownPreset(String),

    #[error("generator {index} outside rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("malformed braid word: {0}")]
    BraidParse(String),

    /// `word` lists 1-based generators.
    #[error("truncation insufficient for Bott–Samelson word {word:?}: D = {truncation}, margin = {margin}")]
    TruncationInsufficient {
        word: Vec<usize>,
        truncation: usize,
        margin: usize,
    },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("length bound {0} exceeded")]
    LengthBoundExceeded(usize),

    #[error("generator {0} is not homogeneous")]
    NonHomogeneous(usize),

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error("system is not of type A: {0}")]
    NotTypeA(String),

    #[error("{0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
