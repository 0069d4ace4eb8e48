use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid braid token `{0}`: expected a nonzero integer")]
    InvalidToken(String),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("leg length {leg} out of range for n = {n}")]
    LegOutOfRange { n: usize, leg: usize },
    #[error("invalid sign sequence: {0}")]
    InvalidSignSequence(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau shape is not a hook")]
    NonHookShape,
    #[error("equal adjacent residues at position {0}")]
    EqualResidues(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("not a polynomial in v - v^-1: {0}")]
    NotAConwayPolynomial(String),
    #[error("word with {letters} letters on {strands} strands exceeds enumeration bounds ({max_letters} letters, {max_strands} strands)")]
    BoundExceeded {
        letters: usize,
        strands: usize,
        max_letters: usize,
        max_strands: usize,
    },
    #[error("word has {word} strands but the module is for n = {module}")]
    StrandMismatch { word: usize, module: usize },
    #[error("vector belongs to a different module than the one acting on it")]
    ShapeMismatch,
    #[error("the Burau oracle needs at least 2 strands")]
    TooFewStrands,
    #[error("malformed polynomial json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
