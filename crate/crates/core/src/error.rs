use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Input,
    Validation,
    ResourceBound,
    Invariant,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix data has {found} entries, expected {rows}x{cols}")]
    BadMatrixShape { rows: usize, cols: usize, found: usize },

    #[error("generator {index} of the sublattice is not contained in the super-lattice")]
    NotContained { index: usize },

    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("group too large: closure exceeds the bound of {bound} elements")]
    GroupTooLarge { bound: usize },

    #[error("degree {degree} exceeds the configured cap of {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },

    #[error("ambient rank {rank} exceeds the supported maximum of {max}")]
    RankTooLarge { rank: usize, max: usize },

    #[error("sublattice is not stable under group element {element}")]
    NotStable { element: usize },

    #[error("not a torus quotient: embedding has invariant factors {factors:?}")]
    TorsionQuotient { factors: Vec<BigInt> },

    #[error("embedding is not injective: rank {rank} < {columns} columns")]
    RankDeficient { rank: usize, columns: usize },

    #[error("action is not a homomorphism at elements ({left}, {right})")]
    NotHomomorphism { left: usize, right: usize },

    #[error("matrix for element {element} is not invertible over the integers")]
    NotUnimodular { element: usize },

    #[error("supplied action on the sub-lattice disagrees with the restriction at element {element}")]
    ActionMismatch { element: usize },

    #[error("element is not invariant under subgroup element {element}")]
    NotInvariant { element: usize },

    #[error("group element set is not a Γ-set: element {element} carries a sign")]
    SignedGammaSet { element: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("cross-check mismatch in degree {degree}: cokernel {cokernel}, H^1 {h1}")]
    CrossCheckMismatch { degree: usize, cokernel: String, h1: String },
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::DimensionMismatch { .. }
            | Error::BadMatrixShape { .. }
            | Error::InvalidPermutation(_) => ErrorCategory::Input,
            Error::GroupTooLarge { .. } | Error::DegreeTooLarge { .. } | Error::RankTooLarge { .. } => {
                ErrorCategory::ResourceBound
            }
            Error::InvariantViolation(_) | Error::CrossCheckMismatch { .. } => ErrorCategory::Invariant,
            _ => ErrorCategory::Validation,
        }
    }
}
