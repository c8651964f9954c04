use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unsupported Cartan type {0}")]
    UnsupportedType(String),
    #[error("invalid structure constants: {0}")]
    InvalidStructureConstants(String),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("linear system has no solution: {0}")]
    SolveFailure(String),
    #[error("the Lie algebra carries no matrix realization")]
    NoMatrixRep,
    #[error("matrix does not lie in the span of the realization")]
    NotInRealization,
    #[error("point is not on the submanifold model {0}")]
    NotOnModel(String),
    #[error("submanifold is not stable at the given point")]
    NotStable,
    #[error("subspace is not closed under the bracket")]
    NotASubalgebra,
    #[error("covector does not annihilate the subalgebra")]
    EtaNotInAnnihilator,
    #[error("base point is not fixed by the coadjoint action of its group element")]
    BaseNotInSubgroupoid,
    #[error("submanifold kind {0} is not invariant under the coadjoint action")]
    KindNotInvariant(String),
    #[error("lift is not valid: {0}")]
    LiftNotValid(String),
    #[error("splitting is invalid: E and its symplectic orthogonal are not complementary")]
    SplittingInvalid,
    #[error("arrows are not composable")]
    NotComposable,
    #[error("subspace is not a stabilizer candidate: {0}")]
    NotACandidate(String),
    #[error("expected a root system")]
    NoRootData,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}
