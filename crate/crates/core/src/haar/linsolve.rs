//! Sparse exact Gaussian elimination, kept in reduced row echelon form as
//! rows arrive.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::qcoeff::{QScalar, Rational};

/// The arithmetic the eliminator needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse of a nonzero value.
    fn inv(&self) -> Self;
    /// Size measure; the pivot with the smallest value is preferred.
    fn complexity(&self) -> usize;
}

impl Field for QScalar {
    fn zero() -> Self {
        QScalar::zero()
    }
    fn one() -> Self {
        QScalar::one()
    }
    fn is_zero(&self) -> bool {
        QScalar::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        QScalar::inv(self).expect("pivot is nonzero")
    }
    fn complexity(&self) -> usize {
        QScalar::complexity(self)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Linear equation `Σ row[k] x_k = rhs`.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation<F> {
    pub row: BTreeMap<usize, F>,
    pub rhs: F,
}

impl<F: Field> Equation<F> {
    pub fn new() -> Self {
        Self { row: BTreeMap::new(), rhs: F::zero() }
    }

    pub fn add_coeff(&mut self, col: usize, c: &F) {
        let slot = self.row.entry(col).or_insert_with(F::zero);
        *slot = slot.add(c);
        if slot.is_zero() {
            self.row.remove(&col);
        }
    }

    pub fn add_rhs(&mut self, c: &F) {
        self.rhs = self.rhs.add(c);
    }

    pub fn is_trivial(&self) -> bool {
        self.row.is_empty() && self.rhs.is_zero()
    }

    /// `self += factor * other`.
    fn axpy(&mut self, factor: &F, other: &Self) {
        for (&col, c) in &other.row {
            self.add_coeff(col, &factor.mul(c));
        }
        self.rhs = self.rhs.add(&factor.mul(&other.rhs));
    }

    fn scale(&mut self, factor: &F) {
        for c in self.row.values_mut() {
            *c = c.mul(factor);
        }
        self.rhs = self.rhs.mul(factor);
    }

    pub fn map<G>(&self, mut f: impl FnMut(&F) -> Option<G>) -> Option<Equation<G>> {
        let mut row = BTreeMap::new();
        for (&k, c) in &self.row {
            row.insert(k, f(c)?);
        }
        Some(Equation { row, rhs: f(&self.rhs)? })
    }
}

impl<F: Field> Default for Equation<F> {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insert {
    /// The row produced a new pivot.
    Pivot,
    /// The row was a combination of earlier ones.
    Redundant,
}

/// The rows contradict each other (reduced to `0 = c` with `c != 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inconsistent;

/// Reduced row echelon form over `unknowns` columns.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    unknowns: usize,
    rows: Vec<(usize, Equation<F>)>,
    pivot_of: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(unknowns: usize) -> Self {
        Self { unknowns, rows: Vec::new(), pivot_of: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn is_complete(&self) -> bool {
        self.rank() == self.unknowns
    }

    pub fn insert(&mut self, mut eq: Equation<F>) -> Result<Insert, Inconsistent> {
        let hits: Vec<(usize, F)> = eq
            .row
            .iter()
            .filter(|(col, _)| self.pivot_of.contains_key(col))
            .map(|(&col, c)| (col, c.clone()))
            .collect();
        for (col, c) in hits {
            let (_, pivot_row) = &self.rows[self.pivot_of[&col]];
            eq.axpy(&c.neg(), pivot_row);
        }
        if eq.row.is_empty() {
            return if eq.rhs.is_zero() { Ok(Insert::Redundant) } else { Err(Inconsistent) };
        }
        let (&col, pivot) = eq
            .row
            .iter()
            .min_by_key(|(&col, c)| (c.complexity(), col))
            .expect("nonempty row");
        let inv = pivot.inv();
        eq.scale(&inv);
        for (_, other) in &mut self.rows {
            if let Some(c) = other.row.get(&col).cloned() {
                other.axpy(&c.neg(), &eq);
            }
        }
        self.pivot_of.insert(col, self.rows.len());
        self.rows.push((col, eq));
        Ok(Insert::Pivot)
    }

    /// The unique solution once every column has a pivot.
    pub fn solution(&self) -> Option<Vec<F>> {
        if !self.is_complete() {
            return None;
        }
        let mut out = alloc::vec![F::zero(); self.unknowns];
        for (col, eq) in &self.rows {
            out[*col] = eq.rhs.clone();
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcoeff::{rat, ratio};

    fn eq(coeffs: &[(usize, i64)], rhs: i64) -> Equation<Rational> {
        let mut e = Equation::new();
        for &(k, c) in coeffs {
            e.add_coeff(k, &rat(c));
        }
        e.add_rhs(&rat(rhs));
        e
    }

    #[test]
    fn solves_small_system() {
        let mut ech = Echelon::new(3);
        assert_eq!(ech.insert(eq(&[(0, 1), (1, 1), (2, 1)], 6)), Ok(Insert::Pivot));
        assert_eq!(ech.insert(eq(&[(0, 2), (1, 2), (2, 2)], 12)), Ok(Insert::Redundant));
        assert!(ech.solution().is_none());
        assert_eq!(ech.insert(eq(&[(0, 1), (1, -1)], -1)), Ok(Insert::Pivot));
        assert_eq!(ech.insert(eq(&[(2, 2)], 6)), Ok(Insert::Pivot));
        assert_eq!(ech.solution().unwrap(), alloc::vec![rat(1), rat(2), rat(3)]);
        assert_eq!(ech.insert(eq(&[(0, 1)], 5)), Err(Inconsistent));
    }

    #[test]
    fn symbolic_pivots() {
        // q x = 1, x + y = 0
        let mut ech = Echelon::new(2);
        let mut e1 = Equation::new();
        e1.add_coeff(0, &QScalar::q());
        e1.add_rhs(&QScalar::one());
        let mut e2 = Equation::new();
        e2.add_coeff(0, &QScalar::one());
        e2.add_coeff(1, &QScalar::one());
        ech.insert(e1).unwrap();
        ech.insert(e2).unwrap();
        let sol = ech.solution().unwrap();
        assert_eq!(sol[0], QScalar::qpow(-1));
        assert_eq!(sol[1], -QScalar::qpow(-1));
        assert_eq!(sol[1].eval_at(&ratio(1, 2)).unwrap(), rat(-2));
    }
}
