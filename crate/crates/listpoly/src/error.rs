use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("objects do not match: expected {expected}, found {found} ({context})")]
    ObjMismatch {
        expected: String,
        found: String,
        context: String,
    },

    #[error("arrows are not parallel: {lhs} vs {rhs}")]
    NotParallel { lhs: String, rhs: String },

    #[error("mediating arrow rejected: equations disagree at {witness}")]
    MediateRejected { witness: String },

    #[error("case merge does not cover the domain: {0}")]
    Coverage(String),

    #[error("constraint violated: {constraint} fails at {witness}")]
    ConstraintViolated { constraint: String, witness: String },

    #[error("unbound variable `{0}`")]
    UnboundVar(String),

    #[error("type error: {0}")]
    Type(String),

    #[error("syntax error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("invalid instance: {0}")]
    Instance(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
