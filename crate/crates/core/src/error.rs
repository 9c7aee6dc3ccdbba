//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    FieldMismatch,
    BadField(String),
    ZeroPolynomial,
    ValuationOfZero,
    NegativeValuation,
    SingularCurve,
    PointNotOnCurve,
    PointFromWrongModel,
    /// Tate-normal-form preconditions: the marked point has order 1, 2 or 3.
    SmallOrderPoint(u64),
    /// nP hit the identity while building a divisor sequence.
    TorsionEncountered(u64),
    NotIntegralAt(String),
    Unsupported(String),
    /// An internal cross-check failed; carries what broke and where.
    Inconsistency(String),
    Parse { line: usize, col: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "elements belong to different fields"),
            Error::BadField(msg) => write!(f, "bad field: {msg}"),
            Error::ZeroPolynomial => write!(f, "operation undefined for the zero polynomial"),
            Error::ValuationOfZero => write!(f, "valuation of zero is undefined"),
            Error::NegativeValuation => write!(f, "element has negative valuation at this place"),
            Error::SingularCurve => write!(f, "curve is singular (discriminant zero)"),
            Error::PointNotOnCurve => write!(f, "point does not satisfy the curve equation"),
            Error::PointFromWrongModel => write!(f, "point belongs to a different model"),
            Error::SmallOrderPoint(n) => write!(f, "point has small order {n} (order >= 4 required)"),
            Error::TorsionEncountered(n) => write!(f, "point is torsion of order {n}"),
            Error::NotIntegralAt(v) => write!(f, "model is not integral at {v}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::Inconsistency(msg) => write!(f, "internal consistency violation: {msg}"),
            Error::Parse { line, col, msg } => write!(f, "parse error at {line}:{col}: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
