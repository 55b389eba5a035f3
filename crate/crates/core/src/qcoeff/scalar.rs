use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{upoly, LaurentPoly};
use super::Rational;
use crate::error::{Error, Result};

/// Exact element of the rational function field Q(q).
///
/// Always canonical: `gcd(num, den) = 1`, `den` has lowest exponent 0 and a
/// leading coefficient of 1. Structural equality is therefore field equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QScalar {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(r))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    /// The parameter `q` itself.
    pub fn q() -> Self {
        Self::qpow(1)
    }

    /// `q^k`.
    pub fn qpow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::qpow(k))
    }

    /// `num / den` brought to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some((c, k)) = den.as_monomial() {
            let num = num.shift(-k).scale(&c.recip());
            return Self { num, den: LaurentPoly::one() };
        }
        let (num_low, mut n) = num.split();
        let (den_low, mut d) = den.split();
        let g = upoly::gcd(&n, &d);
        if g.len() > 1 {
            n = upoly::div_exact(&n, &g);
            d = upoly::div_exact(&d, &g);
        }
        let lead = d.last().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            for c in n.iter_mut().chain(d.iter_mut()) {
                *c /= &lead;
            }
        }
        Self {
            num: LaurentPoly::from_parts(num_low - den_low, n),
            den: LaurentPoly::from_parts(0, d),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// The rational value if this scalar does not depend on `q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_laurent().and_then(LaurentPoly::as_constant)
    }

    /// Total number of stored terms; the pivot heuristic of the solver.
    pub fn complexity(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { num: self.num.shift(k), den: self.den.clone() }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        Self::canonical(self.num.invert_q(), self.den.invert_q())
    }

    /// Numeric value at a rational sample point `q0 != 0`.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational> {
        if q0.is_zero() {
            return Err(Error::Pole);
        }
        let d = self.den.eval(q0).ok_or(Error::Pole)?;
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let n = self.num.eval(q0).ok_or(Error::Pole)?;
        Ok(n / d)
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QScalar::from_laurent(num);
            }
            return QScalar::canonical(num, self.den.clone());
        }
        QScalar::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        self + &(-rhs)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        if self.is_zero() || rhs.is_zero() {
            return QScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QScalar::from_laurent(&self.num * &rhs.num);
        }
        QScalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar { (&self).$m(&rhs) }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, rhs: &QScalar) -> QScalar { (&self).$m(rhs) }
        }
        impl $tr<QScalar> for &QScalar {
            type Output = QScalar;
            fn $m(self, rhs: QScalar) -> QScalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl From<LaurentPoly> for QScalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for QScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// `num` or `num/den`, parenthesizing multi-term parts, e.g. `q^2/(q^2 + 1)`.
impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, "/({})", self.den)
    }
}
