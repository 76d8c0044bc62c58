use thiserror::Error;

/// Errors raised by the polyhedron toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mix: cannot combine Q(sqrt {left}) with Q(sqrt {right})")]
    FieldMix { left: u32, right: u32 },

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    #[error("unsupported radicand {0} (expected one of 1, 2, 5)")]
    UnsupportedRadicand(i64),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("invalid polyhedron: {}", .0.join("; "))]
    InvalidPolyhedron(Vec<String>),

    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("gyration infeasible: {0}")]
    GyrationInfeasible(String),

    #[error("degenerate apex: zero height for {0}-gon faces")]
    DegenerateApex(usize),

    #[error("decode error at {location}: {message}")]
    Decode { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn decode(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Decode {
            location: location.into(),
            message: message.into(),
        }
    }
}
