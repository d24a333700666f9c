use std::fmt;

/// Crate-wide error type. Variants carry enough context to print a diagnostic
/// that names the offending value exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A string did not parse as a rational `"p/q"` or `"p"`.
    BadRational(String),
    /// A lottery was built with no support.
    EmptySupport,
    /// A probability entry was zero or negative.
    NonPositiveProbability { outcome: String, prob: String },
    /// Lottery masses did not sum to one; `deficit` is `1 - total`.
    MassNotOne { total: String, deficit: String },
    /// Two values that must share a dimension do not.
    DimensionMismatch { left: usize, right: usize },
    /// A mixture weight was outside `[0, 1]`.
    AlphaOutOfRange(String),
    /// A coordinate index was outside `0..dim`.
    DimensionOutOfRange { index: usize, dim: usize },
    /// An order was asked to compare outcomes it is not defined on.
    OrderUnsupported(String),
    /// Bad parameters for an order constructor (slopes, labels, ...).
    BadOrderSpec(String),
    /// `k_classify` was called with a point off the closed segment.
    OffSegment(String),
    /// `k_classify` needs two distinct unidimensional endpoints.
    BadSegment(String),
    /// A dominance oracle guard was exceeded.
    OracleGuard { product: usize, limit: usize },
    /// A generator referenced a universe index that does not exist.
    DanglingReference { index: usize, len: usize },
    /// The good-expectations rule needs `exp(f)` in the universe.
    MissingExpectation {
        lottery: String,
        expectation: String,
    },
    /// A size or depth guard was exceeded.
    GuardExceeded {
        what: String,
        value: usize,
        limit: usize,
    },
    /// A replay's stated precondition fails; lists the failing comparisons.
    PreconditionFailed {
        scenario: String,
        details: Vec<String>,
    },
    /// A scripted replay step did not hold in the constructed relation.
    ReplayStepFailed { scenario: String, step: String },
    /// An axiom or scenario identifier was not recognized.
    UnknownName(String),
    /// A utility family was empty.
    EmptyFamily,
    /// Malformed JSON input, with context.
    BadInput(String),
    /// A qualitative dimension referenced an unknown label.
    UnknownLabel { dimension: String, label: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadRational(s) => write!(f, "cannot parse {s:?} as a rational p/q"),
            Error::EmptySupport => write!(f, "lottery has empty support"),
            Error::NonPositiveProbability { outcome, prob } => {
                write!(
                    f,
                    "probability {prob} of outcome {outcome} is not strictly positive"
                )
            }
            Error::MassNotOne { total, deficit } => {
                write!(f, "probabilities sum to {total}, not 1 (deficit {deficit})")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::AlphaOutOfRange(a) => write!(f, "mixture weight {a} is outside [0, 1]"),
            Error::DimensionOutOfRange { index, dim } => {
                write!(
                    f,
                    "coordinate index {index} out of range for dimension {dim}"
                )
            }
            Error::OrderUnsupported(s) => write!(f, "{s}"),
            Error::BadOrderSpec(s) => write!(f, "bad order spec: {s}"),
            Error::OffSegment(s) => write!(f, "point is off the closed segment: {s}"),
            Error::BadSegment(s) => write!(f, "bad segment: {s}"),
            Error::OracleGuard { product, limit } => {
                write!(f, "support product {product} exceeds oracle guard {limit}")
            }
            Error::DanglingReference { index, len } => {
                write!(
                    f,
                    "generator references index {index}, universe has {len} members"
                )
            }
            Error::MissingExpectation {
                lottery,
                expectation,
            } => {
                write!(
                    f,
                    "good-expectations rule: expectation {expectation} of {lottery} is not in the universe"
                )
            }
            Error::GuardExceeded { what, value, limit } => {
                write!(f, "{what} {value} exceeds guard {limit}")
            }
            Error::PreconditionFailed { scenario, details } => {
                write!(f, "{scenario}: precondition failed: {}", details.join("; "))
            }
            Error::ReplayStepFailed { scenario, step } => {
                write!(f, "{scenario}: derived step does not hold: {step}")
            }
            Error::UnknownName(s) => write!(f, "unknown name {s:?}"),
            Error::EmptyFamily => write!(f, "utility family is empty"),
            Error::BadInput(s) => write!(f, "bad input: {s}"),
            Error::UnknownLabel { dimension, label } => {
                write!(f, "dimension {dimension} has no label {label:?}")
            }
        }
    }
}

impl std::error::Error for Error {}
