use thiserror::Error;

/// Errors raised by the algebra operations and the CLI front end.
///
/// Variants split into two families with different process exit codes:
/// mathematical verdicts (a well-formed input fails a mathematical
/// precondition, postcondition, or existence claim) exit with code 1, while
/// input errors (unparseable or ill-formed files and arguments) exit with
/// code 2.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects live in incompatible ambient spaces or have wrong sizes.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// An operator power stayed nonzero up to the ambient dimension.
    #[error("operator is not nilpotent: power {power} of the map is nonzero")]
    NotNilpotent { power: usize },

    /// A subspace required to be a two-sided ideal is not one.
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,

    /// A subspace required to be closed under right multiplication by the
    /// acting subalgebra is not.
    #[error("subspace is not a right module over the given subalgebra")]
    NotAModule,

    /// A linear map fails the module-homomorphism identity it must satisfy.
    #[error("linear map is not a module homomorphism")]
    NotAHomomorphism,

    /// An idempotent-splitting step found only minimal-polynomial factors of
    /// degree greater than one over the rationals, so a required simple
    /// component cannot be produced without a field extension.
    #[error("cannot split over the rationals: {0}")]
    NonSplit(String),

    /// No inner conjugator realizes the requested twist.
    #[error("no inner conjugator exists for the requested map")]
    NoConjugator,

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// A result failed its own verification; indicates either corrupted
    /// input or an internal bug, never silently ignored.
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),

    /// A constructor's structural hypothesis on its input does not hold.
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    /// Ill-formed input text: syntax, unknown names, duplicate products,
    /// zero denominators, dimension guard violations.
    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Io(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
