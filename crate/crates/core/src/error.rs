use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 1 and at most 256, got {0}")]
    InvalidAlphabet(usize),
    #[error("symbol {symbol} is outside the alphabet of size {size}")]
    SymbolOutOfRange { symbol: usize, size: usize },
    #[error("cannot parse word {0:?}")]
    BadWordSyntax(String),
    #[error("a pattern must be non-empty")]
    EmptyPattern,
    #[error("not a permutation of an alphabet of size {0}")]
    InvalidPermutation(usize),
    #[error("enumeration of {required} words exceeds the budget of {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("series coefficient {0} is not an integer")]
    NonIntegralSeries(usize),
    #[error("series coefficient {0} is negative")]
    NegativeCount(usize),
    #[error("recurrence disagrees with the generating function at n = {0}")]
    RecurrenceMismatch(usize),
    #[error("patterns must be distinct")]
    IdenticalPatterns,
    #[error("patterns have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("replacement did not reach a fixpoint within {0} steps")]
    StepLimitExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
