use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("could not parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("block {block} has size {size} < r = {r}")]
    BlockTooSmall { block: usize, size: usize, r: usize },

    #[error("monomials share column {0}")]
    ColumnCollision(usize),

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("partition {0} has no crossing")]
    NoCrossing(String),

    #[error("constraint violated: {0}")]
    Constraint(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
