use thiserror::Error;

/// Errors raised by the library. [`Error::Internal`] marks a failed
/// postcondition that the theory says cannot happen; everything else is a
/// rejected input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("structure constants not antisymmetric at basis pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("realization inconsistent with structure constants: {0}")]
    Realization(String),
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("no admissible (nondegenerate trace) form attached")]
    NoForm,
    #[error("element is not ad-nilpotent")]
    NotNilpotent,
    #[error("filtration did not stabilize within {0} steps")]
    FiltrationUnstable(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a parabolic subalgebra: {0}")]
    NotParabolic(String),
    #[error("no grading lift exists in the given constraint")]
    NoLift,
    #[error("Cartan subspace is not split over the rationals: {0}")]
    NotSplit(String),
    #[error("exterior power of dimension {needed} exceeds the budget {budget}")]
    Budget { needed: u128, budget: u128 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Antisymmetry { .. } => "antisymmetry",
            Error::Jacobi { .. } => "jacobi",
            Error::Realization(_) => "realization",
            Error::NotSubalgebra => "not_subalgebra",
            Error::NotIdeal => "not_ideal",
            Error::NoForm => "no_form",
            Error::NotNilpotent => "not_nilpotent",
            Error::FiltrationUnstable(_) => "filtration_unstable",
            Error::Precondition(_) => "precondition",
            Error::NotParabolic(_) => "not_parabolic",
            Error::NoLift => "no_lift",
            Error::NotSplit(_) => "not_split",
            Error::Budget { .. } => "budget",
            Error::Invalid(_) => "invalid",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns an internal error unless `cond` holds.
pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(what()))
    }
}
