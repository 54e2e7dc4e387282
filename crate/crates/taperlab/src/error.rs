//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter is outside its valid range. `name` identifies the offending
    /// parameter so callers can surface it verbatim.
    InvalidParameter { name: &'static str, reason: String },
    /// Roll-off estimation found too few envelope maxima in the fit span.
    TooFewEnvelopePeaks { found: usize, required: usize },
    /// The fit span lies on (or touches) the numerical noise floor.
    NoiseFloorContamination { median_db: f64 },
    /// A solver target lies outside the range reachable by the family.
    TargetUnreachable {
        name: &'static str,
        target: f64,
        lo: f64,
        hi: f64,
    },
    /// An iterative solver exhausted its step budget.
    NoConvergence { context: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter { name, reason } => {
                write!(f, "invalid parameter `{name}`: {reason}")
            }
            Error::TooFewEnvelopePeaks { found, required } => write!(
                f,
                "only {found} envelope maxima in the fit span (need {required}); \
                 increase the zero-pad factor or widen the span"
            ),
            Error::NoiseFloorContamination { median_db } => write!(
                f,
                "fit span touches the numerical noise floor (median {median_db:.1} dB)"
            ),
            Error::TargetUnreachable {
                name,
                target,
                lo,
                hi,
            } => write!(
                f,
                "target {name} = {target} is outside the reachable range [{lo:.6}, {hi:.6}]"
            ),
            Error::NoConvergence { context } => write!(f, "no convergence: {context}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
