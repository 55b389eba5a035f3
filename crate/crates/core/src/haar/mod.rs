//! The Haar state of O(SU_q(N)) and the Hermitian forms built from it.
//!
//! Values are obtained from the invariance equations
//! `(id ⊗ h) Δ(m) = h(m) 1 = (h ⊗ id) Δ(m)` together with `h(1) = 1`.
//! Only K-bi-invariant monomials can have nonzero value, so the default path
//! projects onto `A[0, 0]` first and solves for those unknowns only, one
//! degree (a multiple of N) at a time. [`Haar::haar_unprojected`] solves the
//! same equations over every normal monomial instead, which checks the
//! vanishing of all other graded pieces rather than assuming it.

pub mod linsolve;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use linsolve::{Echelon, Equation, Insert};

use crate::algebra::{AlgElement, Algebra, Monomial};
use crate::error::{Error, Result};
use crate::grading::{bi_invariant_monomials, is_bi_invariant, project_00};
use crate::hopf::TensorElement;
use crate::qcoeff::{qbinom, qint, QScalar, Rational};

/// Solved Haar values of bi-invariant normal monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaarCache {
    n: usize,
    values: BTreeMap<Monomial, QScalar>,
    solved_degree: usize,
}

impl HaarCache {
    pub fn new(n: usize) -> Self {
        let mut values = BTreeMap::new();
        values.insert(Monomial::one(), QScalar::one());
        Self { n, values, solved_degree: 0 }
    }

    /// Rebuilds a cache from stored values, checking `h(1) = 1` and that every
    /// key is bi-invariant.
    pub fn from_parts(
        n: usize,
        values: BTreeMap<Monomial, QScalar>,
        solved_degree: usize,
    ) -> Result<Self> {
        if values.get(&Monomial::one()) != Some(&QScalar::one()) {
            return Err(Error::Domain("cache must record h(1) = 1"));
        }
        for m in values.keys() {
            if !m.is_reduced(n) || !is_bi_invariant(m, n) {
                return Err(Error::Domain("cache holds a monomial that is not a bi-invariant basis word"));
            }
        }
        Ok(Self { n, values, solved_degree })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn solved_degree(&self) -> usize {
        self.solved_degree
    }

    pub fn values(&self) -> &BTreeMap<Monomial, QScalar> {
        &self.values
    }

    pub fn get(&self, m: &Monomial) -> Option<&QScalar> {
        self.values.get(m)
    }

    /// Adds values from another cache of the same size. Keys present in both
    /// must agree.
    pub fn merge(&mut self, other: &HaarCache) -> Result<()> {
        if other.n != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        for (m, v) in &other.values {
            match self.values.get(m) {
                Some(old) if old != v => {
                    return Err(Error::Domain("conflicting cached Haar values"))
                }
                Some(_) => {}
                None => {
                    self.values.insert(m.clone(), v.clone());
                }
            }
        }
        self.solved_degree = self.solved_degree.max(other.solved_degree);
        Ok(())
    }
}

/// Solver settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HaarOptions {
    /// Largest word length the solver will work at.
    pub max_degree: usize,
    /// Sample point for the rational pre-pass; `None` solves symbolically only.
    pub sample_q: Option<Rational>,
}

impl HaarOptions {
    /// Guards sized for interactive use: 12 for N = 2, 6 for N = 3 and N
    /// (one bi-invariant level) beyond.
    pub fn for_size(n: usize) -> Self {
        let max_degree = match n {
            2 => 12,
            3 => 6,
            _ => n,
        };
        Self { max_degree, sample_q: Some(Rational::new(13.into(), 7.into())) }
    }
}

/// Haar state on O(SU_q(N)) over a borrowed algebra context.
pub struct Haar<'a> {
    alg: &'a Algebra,
    options: HaarOptions,
}

/// Which monomials are unknowns and which equations are written.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    Projected,
    Full,
}

impl<'a> Haar<'a> {
    pub fn new(alg: &'a Algebra) -> Self {
        Self { alg, options: HaarOptions::for_size(alg.n()) }
    }

    pub fn with_options(alg: &'a Algebra, options: HaarOptions) -> Self {
        Self { alg, options }
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn options(&self) -> &HaarOptions {
        &self.options
    }

    /// `h(x)`, solving and caching whatever degrees are still missing.
    pub fn haar(&self, x: &AlgElement, cache: &mut HaarCache) -> Result<QScalar> {
        self.alg.check(x)?;
        if cache.n != self.alg.n() {
            return Err(Error::SizeMismatch { left: self.alg.n(), right: cache.n });
        }
        let p = project_00(x);
        self.ensure_solved(cache, p.degree())?;
        Ok(p.terms().iter().fold(QScalar::zero(), |acc, (m, c)| &acc + &(c * &cache.values[m])))
    }

    /// `h(m)` for a single monomial of any grade (zero off `A[0, 0]`).
    pub fn haar_monomial(&self, m: &Monomial, cache: &mut HaarCache) -> Result<QScalar> {
        if !is_bi_invariant(m, self.alg.n()) {
            return Ok(QScalar::zero());
        }
        self.ensure_solved(cache, m.degree())?;
        cache.values.get(m).cloned().ok_or(Error::Domain("monomial is not in normal form"))
    }

    fn ensure_solved(&self, cache: &mut HaarCache, degree: usize) -> Result<()> {
        if degree <= cache.solved_degree {
            return Ok(());
        }
        if degree > self.options.max_degree {
            return Err(Error::DegreeGuard { degree, max: self.options.max_degree });
        }
        let n = self.alg.n();
        let first = cache.solved_degree + 1;
        for level in (first..=degree).filter(|d| d % n == 0) {
            let unknowns = bi_invariant_monomials(n, level);
            let solved = self.solve_level(level, &unknowns, &cache.values, Mode::Projected)?;
            cache.values.extend(solved);
        }
        cache.solved_degree = degree;
        Ok(())
    }

    /// `h(x)` from the invariance equations over *all* normal monomials of
    /// degree up to `deg x`, without projecting onto `A[0, 0]`.
    pub fn haar_unprojected(&self, x: &AlgElement, table: &mut FullTable) -> Result<QScalar> {
        self.alg.check(x)?;
        let degree = x.degree();
        if degree > self.options.max_degree {
            return Err(Error::DegreeGuard { degree, max: self.options.max_degree });
        }
        for level in table.solved_degree + 1..=degree {
            let unknowns = self.alg.normal_monomials(level);
            let solved = self.solve_level(level, &unknowns, &table.values, Mode::Full)?;
            table.values.extend(solved);
            table.solved_degree = level;
        }
        Ok(x.terms().iter().fold(QScalar::zero(), |acc, (m, c)| &acc + &(c * &table.values[m])))
    }

    /// Builds and solves the invariance equations for the unknowns at one
    /// degree, with every lower degree already known.
    fn solve_level(
        &self,
        degree: usize,
        unknowns: &[Monomial],
        known: &BTreeMap<Monomial, QScalar>,
        mode: Mode,
    ) -> Result<BTreeMap<Monomial, QScalar>> {
        let n = self.alg.n();
        let index: BTreeMap<&Monomial, usize> =
            unknowns.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let admissible = |m: &Monomial| mode == Mode::Full || is_bi_invariant(m, n);
        // Adds c * h(m) to the left-hand side of `eq`.
        let accumulate = |eq: &mut Equation<QScalar>, m: &Monomial, c: &QScalar| {
            if !admissible(m) {
                return;
            }
            if let Some(&k) = index.get(m) {
                eq.add_coeff(k, c);
            } else {
                let v = known.get(m).expect("lower degrees are solved first");
                eq.add_rhs(&-(c * v));
            }
        };

        let mut equations: Vec<Equation<QScalar>> = Vec::new();
        for (k, m) in unknowns.iter().enumerate() {
            let dm = self.alg.coproduct_monomial(m);
            let mut by_left: BTreeMap<&Monomial, Equation<QScalar>> = BTreeMap::new();
            let mut by_right: BTreeMap<&Monomial, Equation<QScalar>> = BTreeMap::new();
            for ((l, r), c) in dm.terms() {
                accumulate(by_left.entry(l).or_default(), r, c);
                accumulate(by_right.entry(r).or_default(), l, c);
            }
            let one = Monomial::one();
            for side in [&mut by_left, &mut by_right] {
                side.entry(&one).or_default().add_coeff(k, &-QScalar::one());
                equations.extend(side.values().filter(|e| !e.is_trivial()).cloned());
            }
        }

        let selected = self.presolve(degree, unknowns.len(), &equations)?;
        let mut ech = Echelon::new(unknowns.len());
        let rows: Vec<&Equation<QScalar>> = match &selected {
            Some(idx) => idx.iter().map(|&k| &equations[k]).collect(),
            None => equations.iter().collect(),
        };
        for eq in rows {
            if ech.insert(eq.clone()).is_err() {
                return Err(Error::Inconsistent { degree });
            }
            if ech.is_complete() {
                break;
            }
        }
        let solution = ech.solution().ok_or(Error::InsufficientConstraints {
            degree,
            rank: ech.rank(),
            unknowns: unknowns.len(),
        })?;
        Ok(unknowns.iter().cloned().zip(solution).collect())
    }

    /// Rational pre-pass at the sample point: detects contradictions and, when
    /// the sampled system has full rank, returns a set of independent rows.
    fn presolve(
        &self,
        degree: usize,
        unknowns: usize,
        equations: &[Equation<QScalar>],
    ) -> Result<Option<Vec<usize>>> {
        let Some(q0) = &self.options.sample_q else {
            return Ok(None);
        };
        let mut ech: Echelon<Rational> = Echelon::new(unknowns);
        let mut picked = Vec::new();
        for (k, eq) in equations.iter().enumerate() {
            let Some(numeric) = eq.map(|c| c.eval_at(q0).ok()) else {
                return Ok(None);
            };
            match ech.insert(numeric) {
                Ok(Insert::Pivot) => picked.push(k),
                Ok(Insert::Redundant) => {}
                Err(_) => return Err(Error::Inconsistent { degree }),
            }
        }
        Ok(ech.is_complete().then_some(picked))
    }

    /// `<x, y>_L = h(x* y)`.
    pub fn inner_l(&self, x: &AlgElement, y: &AlgElement, cache: &mut HaarCache) -> Result<QScalar> {
        let xs = self.alg.star(x)?;
        self.haar(&self.alg.mul(&xs, y)?, cache)
    }

    /// `<x, y>_R = h(x y*)`.
    pub fn inner_r(&self, x: &AlgElement, y: &AlgElement, cache: &mut HaarCache) -> Result<QScalar> {
        let ys = self.alg.star(y)?;
        self.haar(&self.alg.mul(x, &ys)?, cache)
    }

    /// `(id ⊗ h)(t)`.
    pub fn apply_right(&self, t: &TensorElement, cache: &mut HaarCache) -> Result<AlgElement> {
        self.alg.apply_right(t, |m| self.haar_monomial(m, cache))
    }

    /// `(h ⊗ id)(t)`.
    pub fn apply_left(&self, t: &TensorElement, cache: &mut HaarCache) -> Result<AlgElement> {
        self.alg.apply_left(t, |m| self.haar_monomial(m, cache))
    }
}

/// Haar values of every normal monomial up to `solved_degree`, as produced by
/// [`Haar::haar_unprojected`].
#[derive(Clone, Debug, Default)]
pub struct FullTable {
    values: BTreeMap<Monomial, QScalar>,
    solved_degree: usize,
}

impl FullTable {
    pub fn new() -> Self {
        let mut values = BTreeMap::new();
        values.insert(Monomial::one(), QScalar::one());
        Self { values, solved_degree: 0 }
    }

    pub fn values(&self) -> &BTreeMap<Monomial, QScalar> {
        &self.values
    }
}

/// `h(ζ^n)` for N = 2 from the telescoped recursion:
/// `(1 - q^-2) / (1 - q^-2(n+1))`, and 1 at `n = 0`.
pub fn haar_zeta_closed(n: i64) -> Result<QScalar> {
    if n < 0 {
        return Err(Error::Domain("power of zeta must be nonnegative"));
    }
    if n == 0 {
        return Ok(QScalar::one());
    }
    let one = QScalar::one();
    let top = &one - &QScalar::qpow(-2);
    let bottom = &one - &QScalar::qpow(-2 * (n as i32 + 1));
    top.checked_div(&bottom)
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain("matrix size N must be at least 2"));
    }
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { row: i, col: i, n });
    }
    Ok(())
}

/// `<u_ij, u_ij>_L = q^(N+1-2i) / [N]_q`, independent of `j`.
pub fn fundamental_norm_l(n: usize, i: usize) -> Result<QScalar> {
    check_index(n, i)?;
    QScalar::qpow(n as i32 + 1 - 2 * i as i32).checked_div(&qint(n as i64)?)
}

/// `<u_ij, u_ij>_R = q^(2j-N-1) / [N]_q`, independent of `i`.
pub fn fundamental_norm_r(n: usize, j: usize) -> Result<QScalar> {
    check_index(n, j)?;
    QScalar::qpow(2 * j as i32 - n as i32 - 1).checked_div(&qint(n as i64)?)
}

/// Squared normalizer `1 / h(u_ij* u_ij) = q^(2i-N-1) [N]_q` of the
/// orthonormal basis vector built from `u_ij`.
pub fn ket_normalizer_sq(n: usize, i: usize) -> Result<QScalar> {
    check_index(n, i)?;
    Ok(&QScalar::qpow(2 * i as i32 - n as i32 - 1) * &qint(n as i64)?)
}

/// `(x; p)_k = (1 - x)(1 - p x) ... (1 - p^(k-1) x)` inside the algebra.
pub fn q_pochhammer(alg: &Algebra, x: &AlgElement, p: &QScalar, k: u32) -> Result<AlgElement> {
    let mut acc = alg.one();
    let mut power = QScalar::one();
    for _ in 0..k {
        let factor = &alg.one() - &x.scale(&power);
        acc = alg.mul(&acc, &factor)?;
        power = &power * p;
    }
    Ok(acc)
}

/// `ζ = -q b c` in O(SL_q(2)).
pub fn zeta(alg: &Algebra) -> Result<AlgElement> {
    if alg.n() != 2 {
        return Err(Error::Domain("zeta is defined for N = 2"));
    }
    let bc = alg.mul(&alg.generator(1, 2)?, &alg.generator(2, 1)?)?;
    Ok(bc.scale(&-QScalar::q()))
}

/// The closed expansion
/// `Σ_{i+j=n} [n, i]^2_{q^-2} q^(2ij) ζ^j (ζ; q^2)_i ⊗ ζ^i (q^-2 ζ; q^-2)_j`,
/// which should equal `(id ⊗ P) Δ(ζ^n)`.
pub fn ks_projection_expansion(alg: &Algebra, n: u32) -> Result<TensorElement> {
    if n == 0 {
        return Err(Error::Domain("expansion needs n >= 1"));
    }
    let z = zeta(alg)?;
    let p_down = QScalar::qpow(-2);
    let mut acc = TensorElement::zero(2);
    for i in 0..=n {
        let j = n - i;
        let binom = qbinom(n as i64, i as i64, &p_down)?;
        let coef = &(&binom * &binom) * &QScalar::qpow(2 * (i * j) as i32);
        let left = alg.mul(&alg.pow(&z, j)?, &q_pochhammer(alg, &z, &QScalar::qpow(2), i)?)?;
        let shifted = z.scale(&p_down);
        let right = alg.mul(&alg.pow(&z, i)?, &q_pochhammer(alg, &shifted, &p_down, j)?)?;
        acc = &acc + &TensorElement::from_pair(&left, &right)?.scale(&coef);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
