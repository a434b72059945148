use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover relation ({0}, {1}) closes a cycle; input is not an order")]
    CycleDetected(usize, usize),
    #[error("element index {index} out of range for poset of size {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("poset size {0} exceeds the supported maximum of 64 elements")]
    TooManyElements(usize),
    #[error("weak order level {0} is empty")]
    EmptyLevel(usize),
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("witness kinds do not match: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error at line {line}: {msg}")]
    ParseError { line: usize, msg: String },
}
