use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::qcoeff::QScalar;

/// Generator `u_ij`, 1-based. Generators are ordered lexicographically by
/// `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Gen {
    row: u8,
    col: u8,
}

impl Gen {
    pub fn new(row: usize, col: usize, n: usize) -> Result<Self> {
        if row == 0 || col == 0 || row > n || col > n || n > u8::MAX as usize {
            return Err(Error::IndexOutOfRange { row, col, n });
        }
        Ok(Self { row: row as u8, col: col as u8 })
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }

    pub(crate) fn fits(self, n: usize) -> bool {
        self.row() <= n && self.col() <= n
    }
}

/// Word in the generators. Words stored in elements are sorted
/// nondecreasingly; the empty word is the unit.
///
/// Monomials are ordered degree-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<Gen>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    /// A normal (sorted) word; unsorted input is rejected.
    pub fn normal(letters: Vec<Gen>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::NotNormal);
        }
        Ok(Self(letters))
    }

    pub(crate) fn from_sorted_unchecked(letters: Vec<Gen>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] <= w[1]));
        Self(letters)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the word is a basis monomial of O(SL_q(N)): letters within
    /// range, sorted, and not containing every diagonal letter.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.0.iter().all(|g| g.fits(n))
            && self.0.windows(2).all(|w| w[0] <= w[1])
            && self.strip_diagonal(n).is_none()
    }

    pub(crate) fn pushed(&self, g: Gen) -> Self {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(g);
        Self(v)
    }

    /// Runs of equal letters as `(letter, multiplicity)`.
    pub fn runs(&self) -> Vec<(Gen, usize)> {
        let mut out: Vec<(Gen, usize)> = Vec::new();
        for &g in &self.0 {
            match out.last_mut() {
                Some((h, k)) if *h == g => *k += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }

    /// Removes one copy of every diagonal letter, if all of them occur.
    pub(crate) fn strip_diagonal(&self, n: usize) -> Option<Self> {
        let mut need = n;
        let mut seen = alloc::vec![false; n + 1];
        let mut rest = Vec::with_capacity(self.0.len().saturating_sub(n));
        for &g in &self.0 {
            if g.is_diagonal() && !seen[g.row()] {
                seen[g.row()] = true;
                need -= 1;
            } else {
                rest.push(g);
            }
        }
        (need == 0).then_some(Self(rest))
    }

    pub(crate) fn write_with(&self, n: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, k)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if n == 2 {
                let alias = ["a", "b", "c", "d"][(g.row() - 1) * 2 + g.col() - 1];
                f.write_str(alias)?;
            } else {
                write!(f, "u[{},{}]", g.row(), g.col())?;
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Linear combination of monomials with no zero coefficients.
pub(crate) type Lin = BTreeMap<Monomial, QScalar>;

pub(crate) fn lin_add(lin: &mut Lin, m: Monomial, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match lin.entry(m) {
        alloc::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        alloc::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn lin_single(m: Monomial) -> Lin {
    let mut lin = Lin::new();
    lin.insert(m, QScalar::one());
    lin
}
