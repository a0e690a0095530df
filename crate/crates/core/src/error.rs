use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("the zero polynomial has no root multiplicities")]
    ZeroPolynomial,
    #[error("matrix entry {0} does not fit the compact group-element encoding")]
    EntryOverflow(i64),

    #[error("syntax error in {input:?}: {message}")]
    Syntax { input: String, message: String },
    #[error("invalid rank {rank} for type {letter}")]
    InvalidRank { letter: char, rank: usize },
    #[error("node index {index} out of range (rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("{0} is not a diagram automorphism")]
    NotAutomorphism(String),
    #[error("{0} is not of ADE type")]
    NotSimplyLaced(String),
    #[error("orbit {0:?} is neither pairwise orthogonal nor a disjoint union of bonded pairs")]
    InvalidOrbit(Vec<usize>),
    #[error("permutation set is not a group: {0}")]
    NotAGroup(String),

    #[error("group order {order} exceeds the bound {bound}")]
    OrderBound { order: u128, bound: u128 },
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("inconsistent inputs: {0}")]
    Inconsistent(String),
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("suite manifest: {0}")]
    Manifest(String),
}
