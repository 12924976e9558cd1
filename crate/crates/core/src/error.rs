use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("closure exceeded the limit of {limit} elements")]
    ClosureLimitExceeded { limit: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not an automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("search budget of {nodes} nodes exceeded")]
    BudgetExceeded { nodes: u64 },
    #[error("action mismatch: {0}")]
    ActionMismatch(String),
    #[error("wreath element shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{0:?} is not a cycle of the permutation part")]
    NotACycleOfTop(Vec<u32>),
    #[error("quotient by the designated subgroup is not abelian")]
    NonAbelianQuotient,
    #[error("gcd({k}, {order}) != 1")]
    GcdViolation { k: i64, order: u64 },
    #[error("bad composition: {0}")]
    BadComposition(String),
    #[error("unknown group name: {0}")]
    UnknownGroup(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Errors caused by hitting a size, node or closure budget.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ClosureLimitExceeded { .. } | Error::TooLarge(_) | Error::BudgetExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
