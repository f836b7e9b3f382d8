use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed Lie type `{0}` (expected a family letter A-G followed by a rank)")]
    MalformedType(String),
    #[error("inadmissible rank {rank} for type {family}")]
    InadmissibleRank { family: char, rank: usize },
    #[error("node {node} out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("unknown node label {0}")]
    UnknownNodeLabel(i64),
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },
    #[error("vector length {found} does not match rank {rank}")]
    LengthMismatch { found: usize, rank: usize },
    #[error("Weyl group order exceeds the enumeration cap {cap}")]
    CapExceeded { cap: usize },
    #[error("weight is not dominant integral")]
    NonDominant,
    #[error("representation dimension {dim} exceeds the bound {bound}")]
    DimensionBound { dim: u128, bound: u128 },
    #[error("numeric overflow evaluating exponentials; use smaller parameters (|t| <= 5 is supported)")]
    Overflow,
    #[error("degenerate point: min |α(t)| = {min_root_value:e} is below 1e-8")]
    DegeneratePoint { min_root_value: f64 },
    #[error("word is not a reduced word for the longest element")]
    NotLongestWord,
    #[error("K-scalar mismatch at node {node}: computed {computed}, expected {expected}")]
    KScalarMismatch {
        node: usize,
        computed: String,
        expected: String,
    },
    #[error("exponent denominator {0} is too small for this weight system")]
    DenominatorTooSmall(u32),
    #[error("no built-in characteristic polynomial recipe for type {0}")]
    UnsupportedType(String),
    #[error("polynomial degree {0} is below 2")]
    DegreeTooLow(usize),
    #[error("grid range [0, {0}] lies outside the supported numeric range [0, 5]")]
    RangeOutsideSupport(f64),
    #[error("grid needs at least 2 steps, got {0}")]
    TooFewSteps(usize),
    #[error("SVG output needs a rank 2 sample, got rank {0}")]
    SvgRank(usize),
}
