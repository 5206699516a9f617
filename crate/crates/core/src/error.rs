use thiserror::Error;

/// Errors produced while building or analysing a system.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("config parse error: {0}")]
    Config(String),

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("invalid symbol name {0:?}: names must be nonempty and avoid '.', '^', '@', '[', ']', ',' and whitespace")]
    BadSymbolName(String),

    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error(
        "transition matrix is not square: expected {expected} entries in row {row}, found {found}"
    )]
    NonSquare {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("transition entry at ({row}, {col}) is {value}; entries must be 0 or 1")]
    BadEntry { row: usize, col: usize, value: i64 },

    #[error("symbol {0} has no successor")]
    NoSuccessor(String),

    #[error("symbol {0} has no predecessor")]
    NoPredecessor(String),

    #[error("permutation system: transition matrix is not a permutation matrix (row {0})")]
    NotPermutation(usize),

    #[error("permutation system: domain must be the whole alphabet")]
    PermutationDomain,

    #[error("word is empty")]
    EmptyWord,

    #[error("inadmissible transition {from} -> {to} at position {position}")]
    Inadmissible {
        position: i64,
        from: String,
        to: String,
    },

    #[error("point is not in the dilation space: coordinate at position {position} would need symbol {symbol} to lie in the domain")]
    NotInDilation { position: i64, symbol: String },

    #[error("stratum {given} is inconsistent with the point (expected {expected})")]
    StratumMismatch { given: String, expected: String },

    #[error("point literal parse error: {0}")]
    Literal(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("alpha is not unital (domain is a proper subset of the alphabet); the crossed-product identification requires a unital endomorphism")]
    NonUnital,

    #[error("enumeration budget of {0} points exceeded")]
    Budget(usize),

    #[error("angle {0} is not a rational angle")]
    IrrationalAngle(String),

    #[error("invalid angle: {0}")]
    BadAngle(String),

    #[error("representation models live over different cycles")]
    MismatchedCycles,

    #[error("points come from different runs")]
    MixedRun,

    #[error("operation requires a finite permutative system")]
    NotPermutative,

    #[error("bound {name} must be at least {min}")]
    Bound { name: &'static str, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
