use thiserror::Error;

/// Failures reading the matrix, subspace and family file formats.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid scalar `{0}`")]
    Scalar(String),
    #[error("line {line}: {msg}")]
    Text { line: usize, msg: String },
    #[error("matrix must be square with n >= 1, got {rows} row(s) for n = {n}")]
    Shape { n: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {n}")]
    RowLength { row: usize, len: usize, n: usize },
    #[error("json: {0}")]
    Json(String),
    #[error("{path}: {msg}")]
    Io { path: String, msg: String },
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Json(e.to_string())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadonHurwitzError {
    #[error("n must be a positive integer")]
    Zero,
    #[error("n = {0} is odd; the hermitian reference value needs n even")]
    OddOrder(u64),
    #[error("b_max = {0} exceeds the supported range (2^(a+4b) must fit in 64 bits)")]
    TableTooLarge(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KTheoryError {
    #[error("ambient dimension must be positive")]
    ZeroDimension,
    #[error("n must be a positive integer")]
    ZeroMultiple,
    #[error("operands live over different projective spaces (d = {0} vs d = {1})")]
    DimensionMismatch(u32, u32),
    #[error("n*mu = 0 test disagrees with d <= rho_C(n) at n = {n}, d = {d}")]
    PropositionViolated { n: u64, d: u32 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PsiError {
    /// `A` lies in the admissible set yet `psi(A)` is singular.
    #[error("counterexample: A is admissible but det psi(A) = 0\n{matrix}")]
    Counterexample { matrix: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HurwitzError {
    #[error("n must be a positive integer")]
    Zero,
    #[error("unsupported order {n}: supported orders have 2-adic valuation <= {max_valuation} and n <= {max_order}")]
    UnsupportedOrder {
        n: u64,
        max_valuation: u32,
        max_order: u64,
    },
    #[error("n = {0} is odd; the sharpness bound needs n even")]
    OddOrder(u64),
    #[error("n = {0} is not divisible by 8")]
    NotDivisibleBy8(u64),
    #[error("family failed certification: {0} violated identit(y/ies)")]
    NotCertified(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("basis matrices are linearly dependent over R")]
    DegenerateBasis,
    #[error("basis is empty")]
    EmptyBasis,
    #[error("basis matrix {index} has order {got}, expected {expected}")]
    OrderMismatch {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("basis matrix {0} does not belong to the declared class")]
    ClassViolation(usize),
    #[error("pencil inputs must be real matrices")]
    NotReal,
    #[error("a pencil needs exactly two basis matrices, got {0}")]
    NotAPencil(usize),
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("rank {rank} is out of range for order {n}")]
    RankOutOfRange { n: usize, rank: usize },
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("could not draw a matrix of rank {rank} after {attempts} attempts")]
    SamplingExhausted { rank: usize, attempts: usize },
}
