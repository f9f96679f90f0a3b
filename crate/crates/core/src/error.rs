use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field order {0} is not supported (2 <= q <= 1024)")]
    Unsupported(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("edge codes require q >= 3, got q = {0}")]
    DegenerateField(usize),
    #[error("torus has {required} points, limit is {limit}")]
    TooLarge { required: u128, limit: u64 },
    #[error("message space has {required} candidates, limit is {limit}")]
    SearchTooLarge { required: u128, limit: u64 },
    #[error("edge {0:?} equals the full vertex set")]
    FullEdge(Vec<usize>),
    #[error("duplicate vertex labels {0:?}")]
    DuplicateLabels(Vec<usize>),
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error at {locus}: {message}")]
    Parse { locus: String, message: String },
    #[error("vertex {vertex} out of range 1..={s}")]
    InvalidVertex { vertex: i64, s: usize },
    #[error("expected {expected} coefficients, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("monomial {0:?} is not an edge of the hypergraph")]
    EmbeddingMissing(Vec<usize>),
    #[error("parameters not covered by the theorem: {0}")]
    NotCovered(String),
}

impl Error {
    /// True for refusals caused by a configured enumeration limit.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::SearchTooLarge { .. })
    }
}
