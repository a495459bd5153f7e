use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not a permutation of 1..{n}: {window}")]
    InvalidWindow { n: usize, window: String },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("{0} is not below {1} in the Bruhat order")]
    NotComparable(String, String),
    #[error("{0} is not a shortest coset representative")]
    NotShortestRep(String),
    #[error("invalid weight word: {0}")]
    InvalidWord(String),
    #[error("invalid cup diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("compositions {0} and {1} are not similar")]
    Dissimilar(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("({i},{j}) is a consecutive pair; no negative case analysis applies")]
    PositiveCase { i: usize, j: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
