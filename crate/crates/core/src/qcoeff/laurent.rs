use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `q^(low + k)`. Neither end
/// of `coeffs` holds a zero, and the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: Rational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: alloc::vec![c] }
    }

    /// `q^exp`.
    pub fn qpow(exp: i32) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, Rational)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    fn from_raw(low: i32, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The coefficient if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 if self.low == 0 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// `(c, k)` if this is the single term `c * q^k`.
    pub fn as_monomial(&self) -> Option<(&Rational, i32)> {
        (self.coeffs.len() == 1).then(|| (&self.coeffs[0], self.low))
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn low_exp(&self) -> i32 {
        self.low
    }

    /// Highest exponent present (0 for the zero polynomial).
    pub fn high_exp(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    pub fn coeff(&self, exp: i32) -> Rational {
        let k = exp - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Coefficient of the highest power.
    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonzero terms as `(exponent, coefficient)`, exponents ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &Rational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i32, c))
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The substitution `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.high_exp(), coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `q = q0`. `None` when a negative power meets `q0 = 0`.
    pub fn eval(&self, q0: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if q0.is_zero() && self.low < 0 {
            return None;
        }
        // Horner on the ordinary part, then the monomial shift.
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        let shift = if self.low >= 0 {
            num_traits::pow(q0.clone(), self.low as usize)
        } else {
            num_traits::pow(q0.clone(), (-self.low) as usize).recip()
        };
        Some(acc * shift)
    }

    /// Splits off the power of `q`: `self = q^low * p(q)` with `p(0) != 0`.
    pub(crate) fn split(&self) -> (i32, Vec<Rational>) {
        (self.low, self.coeffs.clone())
    }

    pub(crate) fn from_parts(low: i32, coeffs: Vec<Rational>) -> Self {
        Self::from_raw(low, coeffs)
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_rhs { -rhs } else { rhs.clone() };
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().max(rhs.high_exp());
        let mut coeffs = alloc::vec![Rational::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(rhs.low - low) as usize + k];
            if negate_rhs {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_raw(low, coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_impl(rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs =
            alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order, used only to key maps.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.low
            .cmp(&other.low)
            .then_with(|| self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

pub(crate) fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Terms in descending powers of `q`, e.g. `q^3 + q + q^-1 + q^-3`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                fmt_rational(&mag, f)?;
                continue;
            }
            if !mag.is_one() {
                fmt_rational(&mag, f)?;
                f.write_str("*")?;
            }
            match e {
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense ordinary polynomials (ascending coefficients) over Q, used for gcds.
pub(crate) mod upoly {
    use alloc::vec::Vec;
    use num_traits::{One, Zero};

    use super::Rational;

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    pub fn is_zero(p: &[Rational]) -> bool {
        p.iter().all(Zero::is_zero)
    }

    pub fn monic(mut p: Vec<Rational>) -> Vec<Rational> {
        trim(&mut p);
        if let Some(lead) = p.last().cloned() {
            if !lead.is_one() {
                for c in &mut p {
                    *c /= &lead;
                }
            }
        }
        p
    }

    /// Remainder of `a` by a nonzero `b`.
    pub fn rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
        trim(&mut a);
        let db = b.len() - 1;
        let lead = &b[db];
        while a.len() > db {
            let top = a.len() - 1;
            let factor = &a[top] / lead;
            let offset = top - db;
            for (k, c) in b.iter().enumerate() {
                a[offset + k] -= &factor * c;
            }
            a.pop();
            trim(&mut a);
        }
        a
    }

    /// Exact quotient `a / b`; the caller guarantees divisibility.
    pub fn div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut a = a.to_vec();
        trim(&mut a);
        let db = b.len() - 1;
        if a.len() <= db {
            return Vec::new();
        }
        let lead = &b[db];
        let mut quot = alloc::vec![Rational::zero(); a.len() - db];
        while a.len() > db {
            let top = a.len() - 1;
            let factor = &a[top] / lead;
            let offset = top - db;
            for (k, c) in b.iter().enumerate() {
                a[offset + k] -= &factor * c;
            }
            quot[offset] = factor;
            a.pop();
            trim(&mut a);
        }
        quot
    }

    /// Monic gcd over Q by the Euclidean algorithm.
    pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut x = monic(a.to_vec());
        let mut y = monic(b.to_vec());
        if x.len() < y.len() {
            core::mem::swap(&mut x, &mut y);
        }
        while !is_zero(&y) {
            let r = monic(rem(x, &y));
            x = y;
            y = r;
        }
        x
    }
}
