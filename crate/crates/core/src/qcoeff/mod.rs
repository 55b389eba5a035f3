//! Exact arithmetic in Q(q) and the q-combinatorial quantities built on it.

mod comb;
mod laurent;
mod scalar;

pub use comb::{qbinom, qint};
pub use laurent::LaurentPoly;
pub use scalar::QScalar;

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `p / q` as a rational.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
