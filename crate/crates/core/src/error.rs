use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<i64>),
    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),
    #[error("letter {letter} is outside the alphabet [1, {bound}]")]
    LetterOutOfRange { letter: usize, bound: usize },
    #[error("alphabet of size {bound} is too small; need at least {needed} letters")]
    AlphabetTooSmall { needed: usize, bound: usize },
    #[error("alphabet bounds differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("partition {inner:?} is not contained in {outer:?}")]
    NotContained {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("quasisymmetric function is not symmetric")]
    NotSymmetric,
    #[error("invalid Hessenberg vector: {0}")]
    InvalidHessenberg(String),
    #[error("content vector has length {found}, expected {expected}")]
    ContentLength { expected: usize, found: usize },
    #[error("content vector has a negative entry")]
    NegativeContent,
    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },
    #[error("partition length {length} differs from the poset height {height}")]
    HeightMismatch { length: usize, height: usize },
    #[error("parameter {name} must be at least {min}")]
    ParameterTooSmall { name: &'static str, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
