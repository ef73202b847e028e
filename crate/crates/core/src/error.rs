//! Error type shared by all modules of the crate.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by series, genus, eta and graded-algebra operations.
///
/// Operations distinguish between invalid *inputs* (most variants) and
/// internal cross-check failures (`FormMismatch`), which indicate a bug in
/// this crate rather than in the caller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Binary series operation on different indeterminates.
    IndeterminateMismatch(String, String),
    /// A (multiplicative or compositional) inverse was requested of an
    /// element that is not a unit in its ring.
    NonInvertible(&'static str),
    /// A series operation found a constant (or low-order) term violating
    /// its precondition, e.g. `log` on a series with constant term != 1.
    ConstantTerm(&'static str),
    /// The requested coefficient lies beyond the truncation order.
    InsufficientTruncation { needed: usize, have: usize },
    /// Unknown named series or check suite.
    UnknownName(String),
    /// Two independently computed forms of the same quantity disagree.
    /// This falsifies the implementation, not the input.
    FormMismatch(&'static str),
    /// Graded-algebra operands built over different generator tables.
    TableMismatch,
    /// A graded element violates a degree or parity precondition.
    DegreeParity(&'static str),
    /// Malformed textual input (rationals, series files, ...).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IndeterminateMismatch(a, b) => {
                write!(f, "indeterminate mismatch: `{a}` vs `{b}`")
            }
            Error::NonInvertible(what) => write!(f, "non-invertible {what}"),
            Error::ConstantTerm(msg) => write!(f, "constant-term violation: {msg}"),
            Error::InsufficientTruncation { needed, have } => write!(
                f,
                "insufficient truncation order: need {needed}, series known to order {have}"
            ),
            Error::UnknownName(name) => write!(f, "unknown name `{name}`"),
            Error::FormMismatch(what) => write!(
                f,
                "internal cross-check failed ({what}); this is a bug in the library"
            ),
            Error::TableMismatch => write!(f, "graded elements use different generator tables"),
            Error::DegreeParity(msg) => write!(f, "degree/parity violation: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
