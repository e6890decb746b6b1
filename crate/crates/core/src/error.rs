use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A hypothesis of one of the extension constructions that the input failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hypothesis {
    /// The family must be nonempty.
    NonemptyFamily,
    /// Every member must be a subset of the universe.
    SubsetFamily,
    /// The family must have the finite intersection property.
    FiniteIntersection,
    /// The input must already be a filter.
    Filter,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::NonemptyFamily => "family is empty",
            Hypothesis::SubsetFamily => "family is not a family of subsets of the universe",
            Hypothesis::FiniteIntersection => "finite intersection property fails",
            Hypothesis::Filter => "family is not a filter",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width mismatch: expected {expected} elements, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{what} of {found} exceeds the limit of {limit}")]
    Capacity {
        what: &'static str,
        limit: u64,
        found: u64,
    },

    #[error("{0} requires a nonempty family")]
    EmptyFamily(&'static str),

    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("duplicate element name {0:?}")]
    DuplicateLabel(String),

    #[error("unknown element name {0:?}")]
    UnknownElement(String),

    #[error("element index {index} is out of range for a universe of {size} elements")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("bits set above position {width}")]
    StrayBits { width: usize },

    #[error("hypothesis failed: {0}")]
    Precondition(Hypothesis),
}
