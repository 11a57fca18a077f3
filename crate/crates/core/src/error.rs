use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("subset guard exceeded: {ground} elements gives 2^{ground} subsets (limit {limit}); raise the limit to force")]
    SubsetGuard { ground: usize, limit: usize },

    #[error("generator guard exceeded: {count} generators (limit {limit})")]
    GeneratorGuard { count: usize, limit: usize },

    #[error("arrangement is not totally unimodular; use the rational presentation")]
    NotUnimodular,

    #[error("not a valid (matroid, rank) pair: {0}")]
    InvalidTutte(String),

    #[error("variable mismatch: {0}")]
    Variables(String),

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("unsupported: R1 component of positive dimension (projective dimension {0})")]
    PositiveDimensional(i64),

    #[error("unresolved resonance points: found {found} rational points, scheme degree {degree}")]
    UnresolvedPoints { found: usize, degree: usize },

    #[error("not decomposable: {0}")]
    NotDecomposable(String),

    #[error("invalid covering data: {0}")]
    Covering(String),
}

pub type Result<T> = std::result::Result<T, Error>;
