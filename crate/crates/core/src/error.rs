use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("attempted to invert zero")]
    ZeroInversion,
    #[error("element is not invertible: {0}")]
    NonInvertible(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent overflow (limit is 65535 per variable)")]
    ExponentOverflow,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("input is not homogeneous: {0}")]
    NonHomogeneousInput(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("prime decomposition incomplete: {0}")]
    DecompositionIncomplete(String),
    #[error("negative Hilbert difference between B and A at alpha = {0}")]
    NegativeHilbertDifference(u32),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{line}:{column}: syntax error: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: undeclared name `{name}`")]
    UndeclaredVariable {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("{line}:{column}: duplicate name `{name}`")]
    DuplicateName {
        line: usize,
        column: usize,
        name: String,
    },
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. } | Error::UndeclaredVariable { .. } | Error::DuplicateName { .. } => 2,
            Error::ResourceLimit(_) | Error::DecompositionIncomplete(_) => 3,
            Error::CertificateFailure(_) | Error::NegativeHilbertDifference(_) => 4,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
