use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// The variant names are part of the command-line contract: the CLI prints
/// them verbatim when a precondition fails.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("unbounded input: {0}")]
    UnboundedInput(String),
    #[error("rational function is not bounded at infinity (numerator degree {num} > denominator degree {den})")]
    NotBoundedAtInfinity { num: usize, den: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("invalid polarization: {0}")]
    InvalidPolarization(String),
    #[error("no ample shift found for divisor with m <= {cap}")]
    AmplenessShiftFailure { cap: u32 },
}

impl Error {
    /// Stable identifier used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "InvalidInput",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::UnboundedInput(_) => "UnboundedInput",
            Error::NotBoundedAtInfinity { .. } => "NotBoundedAtInfinity",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::Unsupported(_) => "Unsupported",
            Error::PreconditionViolation(_) => "PreconditionViolation",
            Error::InsufficientSamples { .. } => "InsufficientSamples",
            Error::InvalidPolarization(_) => "InvalidPolarization",
            Error::AmplenessShiftFailure { .. } => "AmplenessShiftFailure",
        }
    }

    /// True for failures that indicate a violated mathematical identity
    /// rather than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! inconsistency {
    ($($arg:tt)*) => {
        $crate::error::Error::InternalInconsistency(format!($($arg)*))
    };
}
pub(crate) use inconsistency;
