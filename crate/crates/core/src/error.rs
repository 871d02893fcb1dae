use crate::geom::{Color, Rat};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Why a line arrangement is not simple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SimplicityWitness {
    /// Two lines are parallel (or identical).
    Parallel(usize, usize),
    /// Three lines meet in one point.
    TriplePoint(usize, usize, usize),
}

impl fmt::Display for SimplicityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicityWitness::Parallel(i, j) => write!(f, "lines {i} and {j} are parallel"),
            SimplicityWitness::TriplePoint(i, j, k) => write!(f, "lines {i}, {j} and {k} are concurrent"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertical line has no dual point")]
    VerticalLine,
    #[error("point parameter {0} lies on an arc endpoint")]
    BoundaryPoint(Rat),
    #[error("the origin lies on the curve")]
    OriginOnCurve,
    #[error("arrangement is not simple: {0}")]
    NotSimple(SimplicityWitness),
    #[error("face is unbounded")]
    UnboundedFace,
    #[error("no line of color {0}")]
    MissingColor(Color),
    #[error("not a closed pseudomanifold: {0}")]
    NotPseudomanifold(String),
    #[error("good types have mixed parities: {0}")]
    MixedParity(String),
    #[error("apex lies on a line through two input points or shares an x-coordinate with one")]
    DegenerateApex,
    #[error("point lies on a boundary line of the double wedge")]
    OnBoundary,
    #[error("segment endpoint lies on line {0}")]
    EndpointOnLine(usize),
    #[error("no cut profile halves the arc set")]
    NoCutFound,
    #[error("instance generation failed: {0}")]
    GenerationFailed(String),
    #[error("unknown solver {0:?}")]
    UnknownSolver(String),
    #[error("internal assertion failed: {message}")]
    Internal { message: String, trace: Option<serde_json::Value> },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn internal(message: impl Into<String>) -> Self {
        Error::Internal { message: message.into(), trace: None }
    }

    /// True for failures that contradict a proven statement rather than a bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. } | Error::NoCutFound | Error::MixedParity(_))
    }

    /// Process exit code: 3 for internal assertions, 2 for everything the caller can fix.
    pub fn exit_code(&self) -> i32 {
        if self.is_internal() {
            3
        } else {
            2
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
