use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field spec: {0}")]
    InvalidFieldSpec(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("all coordinates are zero")]
    ZeroTriple,
    #[error("identical inputs have no unique join or meet")]
    IdenticalInputs,
    #[error("singular matrix")]
    SingularMatrix,
    #[error("degenerate frame: {0}")]
    DegenerateFrame(String),
    #[error("field has no real embedding")]
    NoRealRoot,
    #[error("root index {index} out of range ({count} real roots)")]
    RootIndexOutOfRange { index: usize, count: usize },
    #[error("the conic through the given points is not unique")]
    NonUniqueConic,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("arrangement has no singular points")]
    NoSingularPoints,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate parameter {value}: must avoid {set}")]
    DegenerateParameter { value: String, set: String },
    #[error("profile mismatch for {name}: expected {expected}, got {got}")]
    ProfileMismatch {
        name: String,
        expected: String,
        got: String,
    },
    #[error("general position not reached within the resample budget (seed {seed})")]
    GenericityUnattainable { seed: u64 },
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("missing or invalid parameter: {0}")]
    Parameter(String),
    #[error("operation requires a finite field")]
    InfiniteField,
    #[error("invalid selector: {0}")]
    InvalidSelector(String),
    #[error("empty render window")]
    EmptyWindow,
}

pub type Result<T> = std::result::Result<T, Error>;
