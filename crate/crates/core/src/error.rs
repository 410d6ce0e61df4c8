use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    /// The operation is not defined for this curve, e.g. no distinguished
    /// ideals exist.
    #[error("not applicable: {0}")]
    Applicability(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("enumeration budget exceeded: {0}")]
    Budget(String),
    /// An internal consistency check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Process exit status used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 2,
            Error::Applicability(_) => 3,
            Error::Domain(_) | Error::DivisionByZero | Error::Budget(_) => 4,
            Error::Invariant(_) => 5,
        }
    }

    /// Short machine-readable tag.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Applicability(_) => "applicability",
            Error::Domain(_) => "domain",
            Error::DivisionByZero => "domain",
            Error::Budget(_) => "budget",
            Error::Invariant(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invariant(msg.into()))
}
