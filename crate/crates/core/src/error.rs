use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidChar(u8),
    #[error("graph6 record is truncated")]
    Truncated,
    #[error("order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("bad family argument: {0}")]
    BadArgument(String),
    #[error("{kind} is not defined on this graph: {reason}")]
    KindUnsupportedOnGraph { kind: &'static str, reason: String },
    #[error("vertex {0} is not in the set")]
    VertexNotInSet(usize),
    #[error("operation needs a minimizing (superset-closed) parameter, got {0}")]
    WrongDirection(&'static str),
    #[error("set-system method not valid here: {0}")]
    MethodPreconditionViolated(String),
    #[error("order {0} needs an explicit graph6 source")]
    SourceRequired(usize),
    #[error("unknown parameter kind {0:?}")]
    UnknownKind(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
