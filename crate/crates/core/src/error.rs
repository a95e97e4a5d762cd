use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("permutations of different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("rank triple (r={r}, s={s}, t={t}) invalid for n={n}")]
    InvalidRankTriple { r: usize, s: usize, t: usize, n: usize },
    #[error("{0} is not bigrassmannian")]
    NotBigrassmannian(String),
    #[error("{perm} is not {r}-grassmannian")]
    NotGrassmannian { perm: String, r: usize },
    #[error("unsupported Coxeter group {0}")]
    UnsupportedGroup(String),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("group of order {0} exceeds the enumeration budget")]
    TooLarge(usize),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("degree {requested} exceeds the degree budget {budget}")]
    DegreeBudget { requested: usize, budget: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
