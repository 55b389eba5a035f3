use super::{LaurentPoly, QScalar, Rational};
use crate::error::{Error, Result};
use num_traits::One;

/// Symmetric q-integer `[n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)`.
pub fn qint(n: i64) -> Result<QScalar> {
    if n <= 0 {
        return Err(Error::Domain("q-integer requires n >= 1"));
    }
    let n = n as i32;
    let terms = (0..n).map(|k| (n - 1 - 2 * k, Rational::one()));
    Ok(QScalar::from_laurent(LaurentPoly::from_terms(terms)))
}

/// Gaussian binomial coefficient `[n, i]_p` in an arbitrary base `p`.
///
/// Built from the Pascal recurrence `[n, i] = [n-1, i-1] + p^i [n-1, i]`, so the
/// result is a polynomial in `p` even when `p` itself is a rational function.
/// `i > n` gives 0.
pub fn qbinom(n: i64, i: i64, base: &QScalar) -> Result<QScalar> {
    if n < 0 || i < 0 {
        return Err(Error::Domain("q-binomial requires nonnegative arguments"));
    }
    if i > n {
        return Ok(QScalar::zero());
    }
    let (n, i) = (n as usize, i as usize);
    // row[k] holds [m, k] for the current m.
    let mut row = alloc::vec![QScalar::zero(); i + 1];
    row[0] = QScalar::one();
    let mut powers = alloc::vec![QScalar::one(); i + 1];
    for k in 1..=i {
        powers[k] = &powers[k - 1] * base;
    }
    for m in 1..=n {
        for k in (1..=i.min(m)).rev() {
            row[k] = &row[k - 1] + &(&powers[k] * &row[k]);
        }
    }
    Ok(row[i].clone())
}
