//! Hopf *-structure of O(SU_q(N)): coproduct, counit, antipode, the
//! involution and the modular automorphism.
//!
//! `Δ(u_ij) = Σ_k u_ik ⊗ u_kj`, `ε(u_ij) = δ_ij`,
//! `S(u_ij) = (-q)^(i-j) · minor(rows ≠ j, cols ≠ i)`, `u_ij* = S(u_ji)` with
//! coefficients fixed (q is real), and `ϑ(u_ij) = q^(2(N+1-i-j)) u_ij`.

mod tensor;

use alloc::vec::Vec;

pub use tensor::{Tensor3, TensorElement};
use tensor::{pairs_add, Pairs};

use crate::algebra::{lin_add, lin_single, AlgElement, Algebra, Gen, Lin, Monomial};
use crate::error::Result;
use crate::qcoeff::QScalar;

impl Algebra {
    fn antipode_gens(&self) -> &[AlgElement] {
        self.antipode_table.get_or_init(|| {
            let n = self.n();
            let mut table = Vec::with_capacity(n * n);
            for i in 1..=n {
                for j in 1..=n {
                    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
                    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
                    let minor = self.quantum_minor(&rows, &cols).expect("valid minor");
                    let e = i as i32 - j as i32;
                    let sign = if e.rem_euclid(2) == 1 { -1 } else { 1 };
                    table.push(minor.scale(&QScalar::qpow(e).scale(&crate::qcoeff::rat(sign))));
                }
            }
            table
        })
    }

    fn gen_index(&self, g: Gen) -> usize {
        (g.row() - 1) * self.n() + g.col() - 1
    }

    /// `S(u_ij)` for a single generator.
    pub fn antipode_gen(&self, g: Gen) -> &AlgElement {
        &self.antipode_gens()[self.gen_index(g)]
    }

    /// `u_ij*` for a single generator.
    pub fn star_gen(&self, g: Gen) -> &AlgElement {
        let transposed = Gen::new(g.col(), g.row(), self.n()).expect("in range");
        self.antipode_gen(transposed)
    }

    /// Reversed product of per-letter images; the shape of an
    /// anti-homomorphism on a monomial.
    fn anti_extend<'a>(&'a self, m: &Monomial, image: impl Fn(Gen) -> &'a AlgElement) -> AlgElement {
        m.letters()
            .iter()
            .rev()
            .fold(self.one(), |acc, &g| self.mul(&acc, image(g)).expect("same size"))
    }

    /// Antipode, extended as an anti-homomorphism.
    pub fn antipode(&self, x: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        let mut out = Lin::new();
        for (m, c) in x.terms() {
            for (w, cw) in self.anti_extend(m, |g| self.antipode_gen(g)).terms() {
                lin_add(&mut out, w.clone(), c * cw);
            }
        }
        Ok(AlgElement::from_lin(self.n(), out))
    }

    /// The involution `x -> x*`, antilinear (coefficients fixed) and
    /// anti-multiplicative.
    pub fn star(&self, x: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        let mut out = Lin::new();
        for (m, c) in x.terms() {
            for (w, cw) in self.anti_extend(m, |g| self.star_gen(g)).terms() {
                lin_add(&mut out, w.clone(), c * cw);
            }
        }
        Ok(AlgElement::from_lin(self.n(), out))
    }

    /// Exponent `e` with `ϑ(m) = q^e m`.
    pub fn theta_exponent(&self, m: &Monomial) -> i32 {
        let n = self.n() as i32;
        m.letters()
            .iter()
            .map(|g| 2 * (n + 1 - g.row() as i32 - g.col() as i32))
            .sum()
    }

    /// Modular automorphism, diagonal on normal monomials.
    pub fn theta(&self, x: &AlgElement) -> Result<AlgElement> {
        self.check(x)?;
        Ok(x.map_coeffs(|m, c| c.shift(self.theta_exponent(m))))
    }

    pub fn counit_monomial(&self, m: &Monomial) -> QScalar {
        if m.letters().iter().all(|g| g.is_diagonal()) {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    }

    pub fn counit(&self, x: &AlgElement) -> Result<QScalar> {
        self.check(x)?;
        Ok(x.terms()
            .iter()
            .filter(|(m, _)| m.letters().iter().all(|g| g.is_diagonal()))
            .fold(QScalar::zero(), |acc, (_, c)| &acc + c))
    }

    /// `Δ(m)` for a normal monomial.
    pub fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        let n = self.n();
        let mut state = Pairs::new();
        state.insert((Monomial::one(), Monomial::one()), QScalar::one());
        for &g in m.letters() {
            let mut next = Pairs::new();
            for ((l, r), c) in &state {
                for k in 1..=n {
                    let left = Gen::new(g.row(), k, n).expect("in range");
                    let right = Gen::new(k, g.col(), n).expect("in range");
                    let ls = self.mul_monomials(l, &Monomial::from_sorted_unchecked(alloc::vec![left]));
                    let rs = self.mul_monomials(r, &Monomial::from_sorted_unchecked(alloc::vec![right]));
                    for (lm, lc) in &ls {
                        for (rm, rc) in &rs {
                            pairs_add(&mut next, (lm.clone(), rm.clone()), &(c * lc) * rc);
                        }
                    }
                }
            }
            state = next;
        }
        TensorElement::from_pairs(n, state)
    }

    /// Coproduct, extended as an algebra homomorphism.
    pub fn coproduct(&self, x: &AlgElement) -> Result<TensorElement> {
        self.check(x)?;
        let mut out = Pairs::new();
        for (m, c) in x.terms() {
            for (k, v) in self.coproduct_monomial(m).terms() {
                pairs_add(&mut out, k.clone(), c * v);
            }
        }
        Ok(TensorElement::from_pairs(self.n(), out))
    }

    /// Componentwise product `(x ⊗ y)(x' ⊗ y') = x x' ⊗ y y'`.
    pub fn tensor_mul(&self, s: &TensorElement, t: &TensorElement) -> Result<TensorElement> {
        for e in [s.n(), t.n()] {
            if e != self.n() {
                return Err(crate::Error::SizeMismatch { left: self.n(), right: e });
            }
        }
        let mut out = Pairs::new();
        for ((l1, r1), c1) in s.terms() {
            for ((l2, r2), c2) in t.terms() {
                let c = c1 * c2;
                let ls = self.mul_monomials(l1, l2);
                let rs = self.mul_monomials(r1, r2);
                for (lm, lc) in &ls {
                    for (rm, rc) in &rs {
                        pairs_add(&mut out, (lm.clone(), rm.clone()), &(&c * lc) * rc);
                    }
                }
            }
        }
        Ok(TensorElement::from_pairs(self.n(), out))
    }

    /// `(id ⊗ f)(t) = Σ c f(R) L` for a functional `f` on monomials.
    pub fn apply_right<F>(&self, t: &TensorElement, mut f: F) -> Result<AlgElement>
    where
        F: FnMut(&Monomial) -> Result<QScalar>,
    {
        let mut out = Lin::new();
        for ((l, r), c) in t.terms() {
            let v = f(r)?;
            lin_add(&mut out, l.clone(), c * &v);
        }
        Ok(AlgElement::from_lin(self.n(), out))
    }

    /// `(f ⊗ id)(t) = Σ c f(L) R`.
    pub fn apply_left<F>(&self, t: &TensorElement, mut f: F) -> Result<AlgElement>
    where
        F: FnMut(&Monomial) -> Result<QScalar>,
    {
        let mut out = Lin::new();
        for ((l, r), c) in t.terms() {
            let v = f(l)?;
            lin_add(&mut out, r.clone(), c * &v);
        }
        Ok(AlgElement::from_lin(self.n(), out))
    }

    /// `m ∘ (f ⊗ g)(t)` for linear maps given on monomials.
    pub fn multiply_legs<F, G>(&self, t: &TensorElement, mut f: F, mut g: G) -> Result<AlgElement>
    where
        F: FnMut(&AlgElement) -> Result<AlgElement>,
        G: FnMut(&AlgElement) -> Result<AlgElement>,
    {
        let mut acc = self.zero();
        for ((l, r), c) in t.terms() {
            let fl = f(&AlgElement::from_lin(self.n(), lin_single(l.clone())))?;
            let gr = g(&AlgElement::from_lin(self.n(), lin_single(r.clone())))?;
            acc = &acc + &self.mul(&fl, &gr)?.scale(c);
        }
        Ok(acc)
    }

    /// `(x ⊗ y)* = x* ⊗ y*`.
    pub fn star_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        let mut acc = TensorElement::zero(self.n());
        for ((l, r), c) in t.terms() {
            let ls = self.star(&AlgElement::from_lin(self.n(), lin_single(l.clone())))?;
            let rs = self.star(&AlgElement::from_lin(self.n(), lin_single(r.clone())))?;
            acc = &acc + &TensorElement::from_pair(&ls, &rs)?.scale(c);
        }
        Ok(acc)
    }

    /// `(Δ ⊗ id)(t)`.
    pub fn coproduct_left_leg(&self, t: &TensorElement) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((l, r), c) in t.terms() {
            for ((a, b), v) in self.coproduct_monomial(l).terms() {
                tensor3_add(&mut out, (a.clone(), b.clone(), r.clone()), c * v);
            }
        }
        out
    }

    /// `(id ⊗ Δ)(t)`.
    pub fn coproduct_right_leg(&self, t: &TensorElement) -> Tensor3 {
        let mut out = Tensor3::new();
        for ((l, r), c) in t.terms() {
            for ((a, b), v) in self.coproduct_monomial(r).terms() {
                tensor3_add(&mut out, (l.clone(), a.clone(), b.clone()), c * v);
            }
        }
        out
    }
}

fn tensor3_add(map: &mut Tensor3, key: (Monomial, Monomial, Monomial), c: QScalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(key.clone()).or_default();
    *slot = &*slot + &c;
    if slot.is_zero() {
        map.remove(&key);
    }
}

#[cfg(test)]
mod tests;
