//! O(M_q(N)) under the FRT relations, reduced to O(SL_q(N)) by `D_q = 1`.
//!
//! Convention, for `i < j` and `k < l`:
//!
//! ```text
//! u_ik u_il = q u_il u_ik        u_ik u_jk = q u_jk u_ik
//! u_il u_jk = u_jk u_il          u_ik u_jl - u_jl u_ik = (q - q^-1) u_il u_jk
//! D_q = sum_s (-q)^len(s) u_{1,s(1)} ... u_{N,s(N)}
//! ```
//!
//! so that for N = 2 (`a b c d` = `u11 u12 u21 u22`) one has `a b = q b a`,
//! `b c = c b` and `a d - d a = (q - q^-1) b c`.
//!
//! Normal words are sorted by `(row, col)`. The `M_q(N)` normal form is reached
//! by inserting letters from the right and rewriting each out-of-order
//! adjacent pair; the passage to `SL_q(N)` then rewrites every sorted word
//! containing `u_11 u_22 ... u_NN` using centrality of `D_q`.

mod element;
mod monomial;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::{OnceCell, RefCell};

pub use element::AlgElement;
pub use monomial::{Gen, Monomial};
pub(crate) use monomial::{lin_add, lin_single, Lin};

use crate::error::{Error, Result};
use crate::qcoeff::QScalar;

/// Computation context for O(SL_q(N)) at a fixed `N`.
///
/// Holds memo tables for the rewriting engine, so it is `Send` but not `Sync`;
/// give each thread its own context. Elements themselves are plain values.
pub struct Algebra {
    n: usize,
    /// `D_q` as sorted words (each already normal).
    det: Vec<(Monomial, QScalar)>,
    q_inv: QScalar,
    neg_q_diff: QScalar,
    frt_memo: RefCell<BTreeMap<(Monomial, Gen), Lin>>,
    reduce_memo: RefCell<BTreeMap<Monomial, Lin>>,
    pub(crate) antipode_table: OnceCell<Vec<AlgElement>>,
}

impl core::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Algebra").field("n", &self.n).finish_non_exhaustive()
    }
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Self::new(self.n).expect("valid size")
    }
}

/// All permutations of `0..k` with their inversion counts.
pub(crate) fn permutations(k: usize) -> Vec<(Vec<usize>, u32)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, u32)>) {
        let k = used.len();
        if prefix.len() == k {
            let inv = (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count() as u32;
            out.push((prefix.clone(), inv));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut alloc::vec![false; k], &mut out);
    out
}

/// `(-q)^k`.
fn neg_q_pow(k: u32) -> QScalar {
    let s = QScalar::qpow(k as i32);
    if k % 2 == 1 {
        -s
    } else {
        s
    }
}

impl Algebra {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("matrix size N must be at least 2"));
        }
        if n > 16 {
            return Err(Error::Domain("matrix size N above 16 is not supported"));
        }
        let rows: Vec<usize> = (1..=n).collect();
        let det = Self::minor_words(n, &rows, &rows)?;
        let q = QScalar::q();
        let q_inv = QScalar::qpow(-1);
        let neg_q_diff = -(&q - &q_inv);
        Ok(Self {
            n,
            det,
            q_inv,
            neg_q_diff,
            frt_memo: RefCell::new(BTreeMap::new()),
            reduce_memo: RefCell::new(BTreeMap::new()),
            antipode_table: OnceCell::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gen(&self, row: usize, col: usize) -> Result<Gen> {
        Gen::new(row, col, self.n)
    }

    /// The generator `u_ij` as an element.
    pub fn generator(&self, row: usize, col: usize) -> Result<AlgElement> {
        let g = self.gen(row, col)?;
        Ok(AlgElement::from_lin(self.n, lin_single(Monomial::from_sorted_unchecked(alloc::vec![g]))))
    }

    pub fn one(&self) -> AlgElement {
        AlgElement::one(self.n)
    }

    pub fn zero(&self) -> AlgElement {
        AlgElement::zero(self.n)
    }

    pub fn scalar(&self, c: QScalar) -> AlgElement {
        AlgElement::scalar(self.n, c)
    }

    pub(crate) fn check(&self, x: &AlgElement) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: x.n() });
        }
        Ok(())
    }

    /// Rewrites the out-of-order pair `y x` (with `y > x`) as a combination of
    /// sorted pairs.
    fn swap_rule(&self, y: Gen, x: Gen) -> ([(QScalar, Gen, Gen); 2], usize) {
        let one = QScalar::one();
        let unused = (QScalar::zero(), x, y);
        if y.row() == x.row() || y.col() == x.col() {
            ([(self.q_inv.clone(), x, y), unused], 1)
        } else if y.col() < x.col() {
            ([(one, x, y), unused], 1)
        } else {
            // y = u_jl, x = u_ik with i < j, k < l
            let il = Gen::new(x.row(), y.col(), self.n).expect("in range");
            let jk = Gen::new(y.row(), x.col(), self.n).expect("in range");
            ([(one, x, y), (self.neg_q_diff.clone(), il, jk)], 2)
        }
    }

    /// `w * x` in the O(M_q(N)) normal form, for a sorted word `w`.
    fn mq_mul_letter(&self, w: &Monomial, x: Gen) -> Lin {
        let letters = w.letters();
        match letters.last() {
            None => return lin_single(w.pushed(x)),
            Some(&y) if y <= x => return lin_single(w.pushed(x)),
            _ => {}
        }
        let key = (w.clone(), x);
        if let Some(hit) = self.frt_memo.borrow().get(&key) {
            return hit.clone();
        }
        let y = *letters.last().expect("nonempty");
        let prefix = Monomial::from_sorted_unchecked(letters[..letters.len() - 1].to_vec());
        let (rules, count) = self.swap_rule(y, x);
        let mut out = Lin::new();
        for (coef, first, second) in rules.into_iter().take(count) {
            for (m, c) in self.mq_mul_letter(&prefix, first) {
                let c = &coef * &c;
                for (m2, c2) in self.mq_mul_letter(&m, second) {
                    lin_add(&mut out, m2, &c * &c2);
                }
            }
        }
        self.frt_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// `lin * (g_1 g_2 ... g_k)` in O(M_q(N)).
    fn mq_mul_word(&self, lin: Lin, word: &[Gen]) -> Lin {
        word.iter().fold(lin, |acc, &g| {
            let mut next = Lin::new();
            for (m, c) in acc {
                for (m2, c2) in self.mq_mul_letter(&m, g) {
                    lin_add(&mut next, m2, &c * &c2);
                }
            }
            next
        })
    }

    /// Reduced O(SL_q(N)) normal form of a sorted word.
    fn reduce_monomial(&self, m: &Monomial) -> Lin {
        let Some(stripped) = m.strip_diagonal(self.n) else {
            return lin_single(m.clone());
        };
        if let Some(hit) = self.reduce_memo.borrow().get(m) {
            return hit.clone();
        }
        // D_q * m' = c m + rest, and D_q = 1, so m = (m' - rest) / c.
        let mut product = Lin::new();
        for (t, ct) in &self.det {
            for (w, cw) in self.mq_mul_word(lin_single(t.clone()), stripped.letters()) {
                lin_add(&mut product, w, ct * &cw);
            }
        }
        let lead = product.remove(m).expect("D_q * m' contains m");
        let lead_inv = lead.inv().expect("nonzero leading coefficient");
        let mut candidate = Lin::new();
        lin_add(&mut candidate, stripped, lead_inv.clone());
        for (w, c) in product {
            lin_add(&mut candidate, w, -(&c * &lead_inv));
        }
        let mut out = Lin::new();
        for (w, c) in candidate {
            for (w2, c2) in self.reduce_monomial(&w) {
                lin_add(&mut out, w2, &c * &c2);
            }
        }
        self.reduce_memo.borrow_mut().insert(m.clone(), out.clone());
        out
    }

    fn reduce_lin(&self, lin: Lin) -> Lin {
        let mut out = Lin::new();
        for (m, c) in lin {
            if m.degree() < self.n {
                lin_add(&mut out, m, c);
                continue;
            }
            for (m2, c2) in self.reduce_monomial(&m) {
                lin_add(&mut out, m2, &c * &c2);
            }
        }
        out
    }

    /// Product of two sorted words as a reduced combination.
    pub(crate) fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Lin {
        let concat_sorted = match (a.letters().last(), b.letters().first()) {
            (Some(x), Some(y)) => x <= y,
            _ => true,
        };
        let raw = if concat_sorted {
            let mut v = a.letters().to_vec();
            v.extend_from_slice(b.letters());
            lin_single(Monomial::from_sorted_unchecked(v))
        } else {
            self.mq_mul_word(lin_single(a.clone()), b.letters())
        };
        self.reduce_lin(raw)
    }

    /// Normal-form product `x y`.
    pub fn mul(&self, x: &AlgElement, y: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = Lin::new();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let c = c1 * c2;
                for (m, c3) in self.mul_monomials(m1, m2) {
                    lin_add(&mut out, m, &c * &c3);
                }
            }
        }
        Ok(AlgElement::from_lin(self.n, out))
    }

    /// Product of several elements, left to right.
    pub fn product<'a, I>(&self, factors: I) -> Result<AlgElement>
    where
        I: IntoIterator<Item = &'a AlgElement>,
    {
        factors.into_iter().try_fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, x: &AlgElement, k: u32) -> Result<AlgElement> {
        self.check(x)?;
        (0..k).try_fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// The normal form of an arbitrary (unsorted) word.
    pub fn word(&self, letters: &[Gen]) -> Result<AlgElement> {
        if let Some(g) = letters.iter().find(|g| !g.fits(self.n)) {
            return Err(Error::IndexOutOfRange { row: g.row(), col: g.col(), n: self.n });
        }
        let raw = self.mq_mul_word(lin_single(Monomial::one()), letters);
        Ok(AlgElement::from_lin(self.n, self.reduce_lin(raw)))
    }

    /// Imposes `D_q = 1` on an element whose words are sorted.
    pub fn det_reduce(&self, x: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        Ok(AlgElement::from_lin(self.n, self.reduce_lin(x.terms().clone())))
    }

    /// `D_q` before reduction (which sends it to 1).
    pub fn quantum_det_unreduced(&self) -> AlgElement {
        let mut lin = Lin::new();
        for (m, c) in &self.det {
            lin_add(&mut lin, m.clone(), c.clone());
        }
        AlgElement::from_lin(self.n, lin)
    }

    fn minor_words(n: usize, rows: &[usize], cols: &[usize]) -> Result<Vec<(Monomial, QScalar)>> {
        if rows.is_empty() || rows.len() != cols.len() {
            return Err(Error::Domain("quantum minor needs equal, nonempty row and column sets"));
        }
        let strictly_ascending = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
        if !strictly_ascending(rows) || !strictly_ascending(cols) {
            return Err(Error::Domain("minor index sets must be strictly ascending"));
        }
        let mut out = Vec::new();
        for (perm, inversions) in permutations(rows.len()) {
            let letters = rows
                .iter()
                .zip(&perm)
                .map(|(&r, &p)| Gen::new(r, cols[p], n))
                .collect::<Result<Vec<_>>>()?;
            out.push((Monomial::from_sorted_unchecked(letters), neg_q_pow(inversions)));
        }
        Ok(out)
    }

    /// Quantum minor `sum_s (-q)^len(s) u_{r1,c_s(1)} ... u_{rk,c_s(k)}` over
    /// ascending index sets, in reduced normal form (the full minor is 1).
    pub fn quantum_minor(&self, rows: &[usize], cols: &[usize]) -> Result<AlgElement> {
        let mut lin = Lin::new();
        for (m, c) in Self::minor_words(self.n, rows, cols)? {
            lin_add(&mut lin, m, c);
        }
        Ok(AlgElement::from_lin(self.n, self.reduce_lin(lin)))
    }

    /// Sorted words of length `degree` that survive reduction.
    pub fn normal_monomials(&self, degree: usize) -> Vec<Monomial> {
        let n = self.n;
        let gens: Vec<Gen> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| Gen::new(i, j, n).expect("in range")))
            .collect();
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(degree);
        fn go(gens: &[Gen], start: usize, degree: usize, word: &mut Vec<Gen>, n: usize, out: &mut Vec<Monomial>) {
            if word.len() == degree {
                let m = Monomial::from_sorted_unchecked(word.clone());
                if m.strip_diagonal(n).is_none() {
                    out.push(m);
                }
                return;
            }
            for k in start..gens.len() {
                word.push(gens[k]);
                go(gens, k, degree, word, n, out);
                word.pop();
            }
        }
        go(&gens, 0, degree, &mut word, n, &mut out);
        out
    }
}
