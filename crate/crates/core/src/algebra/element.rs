use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::monomial::{lin_add, Gen, Lin, Monomial};
use crate::error::{Error, Result};
use crate::qcoeff::QScalar;

/// Element of O(SL_q(N)): a finite combination of normal monomials.
///
/// Elements produced by [`Algebra`](super::Algebra) operations are fully
/// reduced (no monomial contains every diagonal generator). Elements built
/// directly with [`AlgElement::from_terms`] may still carry such monomials
/// until passed through `det_reduce`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgElement {
    n: usize,
    terms: Lin,
}

impl AlgElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Lin::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, QScalar::one())
    }

    pub fn scalar(n: usize, c: QScalar) -> Self {
        let mut terms = Lin::new();
        lin_add(&mut terms, Monomial::one(), c);
        Self { n, terms }
    }

    /// Single monomial with coefficient 1.
    pub fn monomial(n: usize, m: Monomial) -> Result<Self> {
        Self::from_terms(n, [(m, QScalar::one())])
    }

    /// Builds an element from normal monomials, summing repeats. Every letter
    /// must fit in `n`.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, QScalar)>,
    {
        if n < 2 {
            return Err(Error::Domain("matrix size N must be at least 2"));
        }
        let mut lin = Lin::new();
        for (m, c) in terms {
            if let Some(g) = m.letters().iter().find(|g| !g.fits(n)) {
                return Err(Error::IndexOutOfRange { row: g.row(), col: g.col(), n });
            }
            Monomial::normal(m.letters().to_vec())?;
            lin_add(&mut lin, m, c);
        }
        Ok(Self { n, terms: lin })
    }

    pub(crate) fn from_lin(n: usize, terms: Lin) -> Self {
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &BTreeMap<Monomial, QScalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word length present (0 for scalars and zero).
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The coefficient of 1 if the element is a scalar multiple of the unit.
    pub fn as_scalar(&self) -> Option<QScalar> {
        match self.terms.len() {
            0 => Some(QScalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut terms = Lin::new();
        for (m, x) in &self.terms {
            lin_add(&mut terms, m.clone(), x * c);
        }
        Self { n: self.n, terms }
    }

    /// Applies a coefficient map term by term, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Monomial, &QScalar) -> QScalar) -> Self {
        let mut terms = Lin::new();
        for (m, c) in &self.terms {
            lin_add(&mut terms, m.clone(), f(m, c));
        }
        Self { n: self.n, terms }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch { left: self.n, right: rhs.n });
        }
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            lin_add(&mut terms, m.clone(), c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn contains_gen(&self, g: Gen) -> bool {
        self.terms.keys().any(|m| m.letters().contains(&g))
    }
}

/// Panics if the matrix sizes differ; see [`AlgElement::checked_add`].
impl Add for &AlgElement {
    type Output = AlgElement;
    fn add(self, rhs: &AlgElement) -> AlgElement {
        self.checked_add(rhs).expect("matrix size mismatch in addition")
    }
}

impl Sub for &AlgElement {
    type Output = AlgElement;
    fn sub(self, rhs: &AlgElement) -> AlgElement {
        self + &(-rhs)
    }
}

impl Neg for &AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        self.map_coeffs(|_, c| -c)
    }
}

impl Mul<&QScalar> for &AlgElement {
    type Output = AlgElement;
    fn mul(self, rhs: &QScalar) -> AlgElement {
        self.scale(rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for AlgElement {
            type Output = AlgElement;
            fn $m(self, rhs: AlgElement) -> AlgElement { (&self).$m(&rhs) }
        }
        impl $tr<&AlgElement> for AlgElement {
            type Output = AlgElement;
            fn $m(self, rhs: &AlgElement) -> AlgElement { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub);

impl Neg for AlgElement {
    type Output = AlgElement;
    fn neg(self) -> AlgElement {
        -&self
    }
}

/// Renders terms in monomial order in the syntax accepted by the expression
/// parser, e.g. `1 + q*b*c` or `(q - q^-1)*u[1,3]*u[2,2]`.
impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            // Only single-term coefficients carry their sign outside.
            let single = c.as_laurent().and_then(|p| p.as_monomial());
            let negative = single.is_some_and(|(r, _)| num_traits::Signed::is_negative(r));
            let mag = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if single.is_some() {
                    write!(f, "{mag}*")?;
                } else {
                    write!(f, "({mag})*")?;
                }
            }
            m.write_with(self.n, f)?;
        }
        Ok(())
    }
}
