//! The K-bigrading of O(SL_q(N)) by the torus coactions.
//!
//! A letter `u_ij` has bidegree `(e_i, e_j)` in `Z^(N-1) × Z^(N-1)`, where
//! `e_k` is the k-th unit vector for `k < N` and `e_N = (-1, ..., -1)`.
//! Bidegrees add under multiplication and every FRT relation and `D_q` is
//! homogeneous, so normal monomials are homogeneous.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg};

use crate::algebra::{AlgElement, Gen, Monomial};
use crate::hopf::TensorElement;

/// Index `(alpha, beta)` of the graded piece `A[alpha, beta]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiDegree {
    alpha: Vec<i32>,
    beta: Vec<i32>,
}

impl BiDegree {
    pub fn zero(n: usize) -> Self {
        Self { alpha: alloc::vec![0; n - 1], beta: alloc::vec![0; n - 1] }
    }

    pub fn new(alpha: Vec<i32>, beta: Vec<i32>) -> Self {
        assert_eq!(alpha.len(), beta.len(), "alpha and beta must have equal length");
        Self { alpha, beta }
    }

    pub fn alpha(&self) -> &[i32] {
        &self.alpha
    }

    pub fn beta(&self) -> &[i32] {
        &self.beta
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.iter().chain(&self.beta).all(|&v| v == 0)
    }

    /// `(alpha, beta) -> (-beta, -alpha)`, the effect of the antipode.
    pub fn antipodal(&self) -> Self {
        Self {
            alpha: self.beta.iter().map(|v| -v).collect(),
            beta: self.alpha.iter().map(|v| -v).collect(),
        }
    }
}

impl Add for &BiDegree {
    type Output = BiDegree;
    fn add(self, rhs: &BiDegree) -> BiDegree {
        let sum = |x: &[i32], y: &[i32]| x.iter().zip(y).map(|(a, b)| a + b).collect();
        BiDegree { alpha: sum(&self.alpha, &rhs.alpha), beta: sum(&self.beta, &rhs.beta) }
    }
}

impl Neg for &BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree {
            alpha: self.alpha.iter().map(|v| -v).collect(),
            beta: self.beta.iter().map(|v| -v).collect(),
        }
    }
}

fn add_unit(v: &mut [i32], k: usize, n: usize) {
    if k < n {
        v[k - 1] += 1;
    } else {
        v.iter_mut().for_each(|x| *x -= 1);
    }
}

pub fn gen_bidegree(g: Gen, n: usize) -> BiDegree {
    let mut d = BiDegree::zero(n);
    add_unit(&mut d.alpha, g.row(), n);
    add_unit(&mut d.beta, g.col(), n);
    d
}

pub fn bidegree(m: &Monomial, n: usize) -> BiDegree {
    let mut d = BiDegree::zero(n);
    for g in m.letters() {
        add_unit(&mut d.alpha, g.row(), n);
        add_unit(&mut d.beta, g.col(), n);
    }
    d
}

/// True when every row index and every column index occurs equally often.
pub fn is_bi_invariant(m: &Monomial, n: usize) -> bool {
    bidegree(m, n).is_zero()
}

/// Splits `x` into its homogeneous components.
pub fn decompose(x: &AlgElement) -> BTreeMap<BiDegree, AlgElement> {
    let n = x.n();
    let mut parts: BTreeMap<BiDegree, Vec<(Monomial, crate::QScalar)>> = BTreeMap::new();
    for (m, c) in x.terms() {
        parts.entry(bidegree(m, n)).or_default().push((m.clone(), c.clone()));
    }
    parts
        .into_iter()
        .map(|(d, terms)| (d, AlgElement::from_terms(n, terms).expect("terms of a valid element")))
        .collect()
}

/// Projection `P` onto the K-bi-invariant part `A[0, 0]`.
pub fn project_00(x: &AlgElement) -> AlgElement {
    let n = x.n();
    x.map_coeffs(|m, c| if is_bi_invariant(m, n) { c.clone() } else { crate::QScalar::zero() })
}

/// `(id ⊗ P)`: keeps the terms whose right leg is bi-invariant.
pub fn tensor_project_right(t: &TensorElement) -> TensorElement {
    let n = t.n();
    t.filter(|_, r| is_bi_invariant(r, n))
}

/// Normal monomials of the given degree in `A[0, 0]`.
///
/// They correspond to `N × N` matrices of exponents whose row and column sums
/// all equal `degree / N`, minus those that contain the whole diagonal.
pub fn bi_invariant_monomials(n: usize, degree: usize) -> Vec<Monomial> {
    if !degree.is_multiple_of(n) {
        return Vec::new();
    }
    let k = degree / n;
    let mut out = Vec::new();
    let col_left = alloc::vec![k; n];
    let mut filler = TableFill { n, k, table: alloc::vec![0; n * n], col_left, out: &mut out };
    filler.fill(0, 0, k);
    out.sort();
    out
}

struct TableFill<'a> {
    n: usize,
    k: usize,
    table: Vec<usize>,
    col_left: Vec<usize>,
    out: &'a mut Vec<Monomial>,
}

impl TableFill<'_> {
    fn fill(&mut self, row: usize, col: usize, row_left: usize) {
        let n = self.n;
        if row == n {
            if (0..n).all(|i| self.table[i * n + i] > 0) {
                return;
            }
            let mut letters = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let g = Gen::new(i + 1, j + 1, n).expect("in range");
                    letters.extend(core::iter::repeat_n(g, self.table[i * n + j]));
                }
            }
            self.out.push(Monomial::normal(letters).expect("sorted by construction"));
            return;
        }
        let hi = if col == n - 1 { row_left } else { 0 };
        let range = if col == n - 1 { hi..=hi } else { 0..=row_left };
        for v in range {
            if v > self.col_left[col] {
                break;
            }
            self.table[row * n + col] = v;
            self.col_left[col] -= v;
            if col == n - 1 {
                self.fill(row + 1, 0, self.k);
            } else {
                self.fill(row, col + 1, row_left - v);
            }
            self.col_left[col] += v;
        }
        self.table[row * n + col] = 0;
    }
}

#[cfg(test)]
mod tests;
