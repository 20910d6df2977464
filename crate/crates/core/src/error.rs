use core::fmt;

/// Errors raised by the algebra routines.
///
/// `Hypothesis` is kept apart from everything else: a theorem checker that
/// returns it has not evaluated the claim at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoreError {
    /// Two operands live in polynomial rings with different numbers of variables.
    ArityMismatch { expected: usize, found: usize },
    /// An operation needed at least one generator (or at least one input).
    Empty(&'static str),
    /// The zero ideal was passed where a nonzero ideal is required.
    ZeroIdeal,
    /// The input does not satisfy the hypotheses of the requested check.
    Hypothesis(&'static str),
    /// An index or parameter is outside its admissible range.
    OutOfRange { what: &'static str, value: u64 },
    /// Sequences do not describe a valid staircase.
    InvalidStaircase(&'static str),
    /// A configurable work ceiling would be exceeded.
    ResourceLimit { what: &'static str, limit: u64 },
    /// An internal consistency check failed.
    Inconsistent(&'static str),
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::ArityMismatch { expected, found } => {
                write!(f, "arity mismatch: expected {expected} variables, found {found}")
            }
            CoreError::Empty(what) => write!(f, "empty input: {what}"),
            CoreError::ZeroIdeal => f.write_str("operation is undefined for the zero ideal"),
            CoreError::Hypothesis(what) => write!(f, "hypothesis not met: {what}"),
            CoreError::OutOfRange { what, value } => write!(f, "{what} out of range: {value}"),
            CoreError::InvalidStaircase(what) => write!(f, "invalid staircase: {what}"),
            CoreError::ResourceLimit { what, limit } => {
                write!(f, "resource ceiling exceeded: {what} (limit {limit})")
            }
            CoreError::Inconsistent(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl core::error::Error for CoreError {}

pub type Result<T> = core::result::Result<T, CoreError>;
