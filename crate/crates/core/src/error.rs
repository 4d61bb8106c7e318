use alloc::string::String;

/// Errors raised while parsing text into a Motzkin word.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input: a Motzkin word has at least one symbol")]
    Empty,
    #[error("character {ch:?} at offset {offset} is not one of '0', '(', ')'")]
    Alphabet { ch: char, offset: usize },
    #[error("unbalanced word: {opens} opening and {closes} closing brackets")]
    Unbalanced { opens: usize, closes: usize },
    #[error("prefix ending at offset {offset} has more closing than opening brackets")]
    PrefixViolation { offset: usize },
}

/// Domain errors of the library operations.
///
/// Each variant names the precondition that was violated. None of them signals an
/// internal fault except [`Error::PolynomialMismatch`], which would mean a proved
/// index identity disagreed with ranking.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("the word has no brackets, so it has no outer blocks")]
    ZeroWord,
    #[error("span ({open}, {close}) is not an outer block of the word")]
    Span { open: usize, close: usize },
    #[error("\"0\" is the first word of the row and has no predecessor")]
    Underflow,
    #[error("operands cross: some block does not lie in a depth-0 zero zone of the other word")]
    Crossing,
    #[error("subtrahend is not included: some of its extended blocks are not blocks of the minuend")]
    Inclusion,
    #[error("no applicable site at position {position}: {reason}")]
    Site { position: usize, reason: &'static str },
    #[error("path blocked at position {position}: expected a zero")]
    Blocked { position: usize },
    #[error("the result would not be a valid Motzkin word: {0}")]
    Validity(&'static str),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("{what} {value} exceeds the configured limit {limit}")]
    Limit { what: &'static str, value: String, limit: usize },
    #[error("unknown sequence {0:?}")]
    UnknownSequence(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("index polynomial predicted {predicted} but ranking measured {verified}")]
    PolynomialMismatch { predicted: String, verified: String },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
