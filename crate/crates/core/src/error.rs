use std::fmt;

use thiserror::Error;

use crate::lattice::Point;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Argument-range problems are reported up front; integrality and
/// postcondition violations indicate a defect in a formula transcription or
/// a construction and are never rounded away.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("paths have different step counts ({0} vs {1})")]
    StepCountMismatch(usize, usize),

    #[error("paths start at different points ({0} vs {1})")]
    StartMismatch(Point, Point),

    #[error("paths end at different points ({0} vs {1})")]
    EndpointMismatch(Point, Point),

    #[error("paths must start at the origin, found {0}")]
    NotAtOrigin(Point),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(String),

    #[error("cannot parse {0:?} as an exact rational such as 1/3")]
    InvalidRational(String),

    #[error("empty level sequence")]
    EmptyLevels,

    #[error("formula {formula} is not integral at {args}: got {value}")]
    NonIntegral {
        formula: &'static str,
        args: String,
        value: String,
    },

    #[error("formula {formula} is singular at {args}")]
    Singular { formula: &'static str, args: String },

    #[error("series error: {0}")]
    Series(String),

    #[error("{0}")]
    Discrepancy(Discrepancy),

    #[error("bijection case {case}: {detail}")]
    Bijection { case: &'static str, detail: String },

    #[error("level file line {line}: {detail}")]
    LevelFile { line: usize, detail: String },
}

/// Two routes to the same quantity that disagreed.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Discrepancy {
    pub quantity: &'static str,
    pub args: String,
    pub formula: String,
    pub oracle: String,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at {}: formula gives {}, oracle gives {}",
            self.quantity, self.args, self.formula, self.oracle
        )
    }
}

pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Error {
    Error::OutOfRange {
        what,
        detail: detail.into(),
    }
}
