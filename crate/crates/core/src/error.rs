use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("generator {value} exceeds the cap {cap}")]
    GeneratorTooLarge { value: u64, cap: u64 },
    #[error("generators are not coprime (gcd = {gcd})")]
    NonCoprimeGenerators { gcd: u64 },
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(i64),
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("series tail is not constant over a window of {window} terms; raise the order")]
    NotStabilized { window: usize },
    #[error("enumeration exceeded the node budget of {budget}; raise the budget")]
    BudgetExceeded { budget: u64 },
    #[error("invalid word: {0}")]
    InvalidWord(WordDefect),
    #[error("the given set is not the gap set of an ideal")]
    NotAnIdeal,
    #[error("ineligible triple: {0}")]
    IneligibleTriple(String),
    #[error("grid cover violated at {0}")]
    CoverViolation(u64),
    #[error("family parameter n = {0} must satisfy n >= 2 and n mod 3 != 1")]
    BadFamilyParameter(u64),
    #[error("arithmetic overflow")]
    Overflow,
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GeneratorTooLarge { .. } => "GeneratorTooLarge",
            Error::NonCoprimeGenerators { .. } => "NonCoprimeGenerators",
            Error::NotAnElement(_) => "NotAnElement",
            Error::InexactDivision => "InexactDivision",
            Error::BadArguments(_) => "BadArguments",
            Error::NotStabilized { .. } => "NotStabilized",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::InvalidWord(_) => "InvalidWord",
            Error::NotAnIdeal => "NotAnIdeal",
            Error::IneligibleTriple(_) => "IneligibleTriple",
            Error::CoverViolation(_) => "CoverViolation",
            Error::BadFamilyParameter(_) => "BadFamilyParameter",
            Error::Overflow => "Overflow",
        }
    }
}

/// Which of the three path conditions a word breaks.
///
/// (1) exactly `a` descents, (2) the last letter is a descent,
/// (3) at most `b` right steps between the first and last descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordDefect {
    DescentCount { expected: usize, found: usize },
    LastNotDescent,
    InnerRunTooLong { found: usize, max: usize },
}

impl fmt::Display for WordDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordDefect::DescentCount { expected, found } => write!(
                f,
                "condition (1) fails: expected {expected} D steps, found {found}"
            ),
            WordDefect::LastNotDescent => {
                write!(f, "condition (2) fails: the word must end with D")
            }
            WordDefect::InnerRunTooLong { found, max } => write!(
                f,
                "condition (3) fails: {found} R steps between the first and last D (at most {max})"
            ),
        }
    }
}
