use thiserror::Error;

/// Everything that can go wrong while encoding, decoding or parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("law violation in {encoder}: {detail}")]
    LawViolation { encoder: String, detail: String },
    #[error("unknown encoder `{0}`")]
    UnknownEncoder(String),
    #[error("value does not have the shape expected by `{expected}`")]
    ShapeMismatch { expected: String },
    #[error("digit {digit} is not valid in base {base}")]
    InvalidDigit { digit: String, base: String },
    #[error("base must be at least 2, got {0}")]
    BaseTooSmall(String),
    #[error("input is not sorted")]
    UnsortedInput,
    #[error("0 has no prime factorization")]
    NotFactorable,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("prime table limit exceeded: {0}")]
    PrimeBudgetExceeded(String),
    #[error("{0} is not a dyadic rational in [0,1)")]
    NotDyadic(String),
    #[error("recursion budget of {0} nodes exceeded")]
    NonTerminating(usize),
    #[error("urelement {atom} is out of range (limit {limit})")]
    AtomOutOfRange { atom: String, limit: String },
    #[error("rank {rank} is too large for a permutation of size {size}")]
    RankTooLarge { rank: String, size: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("digit {digit} at position {position} is out of range")]
    DigitOutOfRange { digit: String, position: usize },
    #[error("index {0} is out of range")]
    IndexOutOfRange(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("coefficient {coeff} is out of range for base {base}")]
    CoeffOutOfRange { coeff: String, base: String },
    #[error("an unordered pair needs two distinct elements")]
    NotTwoDistinct,
    #[error("empty tuple")]
    EmptyTuple,
    #[error("truth table {tt} does not fit {nvars} variables")]
    TruthTableTooLarge { tt: String, nvars: usize },
    #[error("malformed decision diagram: {0}")]
    MalformedTree(String),
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error("leaf value {0} is out of range")]
    LeafOutOfRange(String),
    #[error("duplicate edge or element")]
    DuplicateEdge,
    #[error("literal 0 is not allowed")]
    ZeroLiteral,
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("unbalanced parentheses")]
    UnbalancedParens,
    #[error("trailing input after a complete code")]
    TrailingInput,
    #[error("code ends prematurely")]
    TruncatedCode,
    #[error("non-canonical sequence: {0}")]
    NonCanonical(String),
    #[error("a 5'->3' strand cannot encode an empty sequence")]
    ZeroP5x3,
    #[error("{0} is not divisible")]
    NotDivisible(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn law(encoder: &str, detail: impl Into<String>) -> Self {
        Error::LawViolation {
            encoder: encoder.to_string(),
            detail: detail.into(),
        }
    }

    /// True for malformed textual input, false for well-formed values outside a domain.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::UnknownKind(_))
    }
}
