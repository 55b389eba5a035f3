use alloc::collections::BTreeMap;

use crate::algebra::{AlgElement, Monomial};
use crate::error::{Error, Result};
use crate::qcoeff::QScalar;

pub(crate) type Pairs = BTreeMap<(Monomial, Monomial), QScalar>;

pub(crate) fn pairs_add(map: &mut Pairs, key: (Monomial, Monomial), c: QScalar) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Element of O(SL_q(N)) ⊗ O(SL_q(N)), a combination of pairs of normal
/// monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    n: usize,
    terms: Pairs,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: Pairs::new() }
    }

    /// `1 ⊗ 1`.
    pub fn one(n: usize) -> Self {
        let mut terms = Pairs::new();
        terms.insert((Monomial::one(), Monomial::one()), QScalar::one());
        Self { n, terms }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Monomial, Monomial), QScalar)>,
    {
        let mut out = Pairs::new();
        for ((l, r), c) in terms {
            // validates letters and ordering of each leg
            AlgElement::monomial(n, l.clone())?;
            AlgElement::monomial(n, r.clone())?;
            pairs_add(&mut out, (l, r), c);
        }
        Ok(Self { n, terms: out })
    }

    pub(crate) fn from_pairs(n: usize, terms: Pairs) -> Self {
        Self { n, terms }
    }

    /// `x ⊗ y`, expanded bilinearly.
    pub fn from_pair(x: &AlgElement, y: &AlgElement) -> Result<Self> {
        if x.n() != y.n() {
            return Err(Error::SizeMismatch { left: x.n(), right: y.n() });
        }
        let mut terms = Pairs::new();
        for (l, cl) in x.terms() {
            for (r, cr) in y.terms() {
                pairs_add(&mut terms, (l.clone(), r.clone()), cl * cr);
            }
        }
        Ok(Self { n: x.n(), terms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), QScalar> {
        &self.terms
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

    pub fn coeff(&self, left: &Monomial, right: &Monomial) -> QScalar {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_default()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch { left: self.n, right: rhs.n });
        }
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            pairs_add(&mut terms, k.clone(), c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut terms = Pairs::new();
        for (k, x) in &self.terms {
            pairs_add(&mut terms, k.clone(), x * c);
        }
        Self { n: self.n, terms }
    }

    /// Keeps the terms whose legs satisfy `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial, &Monomial) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|((l, r), _)| keep(l, r))
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        Self { n: self.n, terms }
    }
}

impl core::ops::Add for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        self.checked_add(rhs).expect("matrix size mismatch in addition")
    }
}

impl core::ops::Sub for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &rhs.scale(&QScalar::from_int(-1))
    }
}

/// Threefold tensors, only needed to state coassociativity.
pub type Tensor3 = BTreeMap<(Monomial, Monomial, Monomial), QScalar>;
