use core::fmt;

/// Failures raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    DivisionByZero,
    /// Numeric evaluation hit a zero of the denominator (or `q = 0`).
    Pole,
    /// Two operands belong to algebras of different matrix size.
    SizeMismatch { left: usize, right: usize },
    /// A generator index is outside `1..=n`.
    IndexOutOfRange { row: usize, col: usize, n: usize },
    /// A word handed to a constructor is not in normal (sorted) order.
    NotNormal,
    /// The invariance equations do not determine every Haar value at this degree.
    InsufficientConstraints { degree: usize, rank: usize, unknowns: usize },
    /// The invariance equations contradict each other at this degree.
    Inconsistent { degree: usize },
    /// The requested element exceeds the configured solver degree guard.
    DegreeGuard { degree: usize, max: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::Pole => f.write_str("evaluation point is a pole or q = 0"),
            Error::SizeMismatch { left, right } => {
                write!(f, "matrix size mismatch: N = {left} vs N = {right}")
            }
            Error::IndexOutOfRange { row, col, n } => {
                write!(f, "generator u[{row},{col}] out of range for N = {n}")
            }
            Error::NotNormal => f.write_str("word is not in normal order"),
            Error::InsufficientConstraints { degree, rank, unknowns } => write!(
                f,
                "insufficient invariance constraints at degree {degree}: rank {rank} < {unknowns} unknowns"
            ),
            Error::Inconsistent { degree } => {
                write!(f, "inconsistent invariance equations at degree {degree}")
            }
            Error::DegreeGuard { degree, max } => write!(
                f,
                "element degree {degree} exceeds the solver guard of {max} (raise --max-degree)"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
