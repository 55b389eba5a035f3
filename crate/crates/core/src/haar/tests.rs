use alloc::string::ToString;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::qcoeff::{rat, ratio};

fn g(alg: &Algebra, i: usize, j: usize) -> AlgElement {
    alg.generator(i, j).unwrap()
}

fn word(alg: &Algebra, w: &[(usize, usize)]) -> AlgElement {
    let letters: Vec<_> = w.iter().map(|&(i, j)| alg.gen(i, j).unwrap()).collect();
    alg.word(&letters).unwrap()
}

fn frac(num: &[(i32, i64)], den: &[(i32, i64)]) -> QScalar {
    let poly = |ts: &[(i32, i64)]| {
        ts.iter().fold(QScalar::zero(), |acc, &(e, c)| &acc + &QScalar::qpow(e).scale(&rat(c)))
    };
    poly(num).checked_div(&poly(den)).unwrap()
}

#[test]
fn haar_sl2_examples() {
    let alg = Algebra::new(2).unwrap();
    let haar = Haar::new(&alg);
    let mut cache = HaarCache::new(2);
    let (a, b, c, d) = (g(&alg, 1, 1), g(&alg, 1, 2), g(&alg, 2, 1), g(&alg, 2, 2));
    assert_eq!(haar.haar(&alg.one(), &mut cache).unwrap(), QScalar::one());
    assert_eq!(haar.haar(&a, &mut cache).unwrap(), QScalar::zero());

    let z = zeta(&alg).unwrap();
    let h_zeta = frac(&[(0, 1), (-2, -1)], &[(0, 1), (-4, -1)]);
    assert_eq!(haar.haar(&z, &mut cache).unwrap(), h_zeta);
    assert_eq!(h_zeta, frac(&[(2, 1)], &[(2, 1), (0, 1)]));
    assert_eq!(h_zeta.to_string(), "q^2/(q^2 + 1)");

    let bc = alg.mul(&b, &c).unwrap();
    assert_eq!(haar.haar(&bc, &mut cache).unwrap(), frac(&[(0, -1)], &[(1, 1), (-1, 1)]));
    let ad = alg.mul(&a, &d).unwrap();
    let da = alg.mul(&d, &a).unwrap();
    assert_eq!(haar.haar(&ad, &mut cache).unwrap(), frac(&[(0, 1)], &[(2, 1), (0, 1)]));
    assert_eq!(haar.haar(&da, &mut cache).unwrap(), h_zeta);
    assert!(cache.values().keys().all(|m| crate::grading::is_bi_invariant(m, 2)));
}

#[test]
fn inner_product_examples() {
    let alg = Algebra::new(2).unwrap();
    let haar = Haar::new(&alg);
    let mut cache = HaarCache::new(2);
    let (a, b) = (g(&alg, 1, 1), g(&alg, 1, 2));
    assert_eq!(haar.inner_l(&b, &b, &mut cache).unwrap(), haar_zeta_closed(1).unwrap());
    assert!(haar.inner_l(&a, &b, &mut cache).unwrap().is_zero());
    assert_eq!(haar.inner_r(&a, &a, &mut cache).unwrap(), frac(&[(0, 1)], &[(2, 1), (0, 1)]));
}

#[test]
fn zeta_closed_form() {
    assert_eq!(haar_zeta_closed(0).unwrap(), QScalar::one());
    assert_eq!(haar_zeta_closed(3).unwrap(), frac(&[(0, 1), (-2, -1)], &[(0, 1), (-8, -1)]));
    assert!(haar_zeta_closed(-1).is_err());
    // the recursion h(ζ^n) = (1 - q^-2n)/(1 - q^-2(n+1)) h(ζ^(n-1))
    for n in 1..6 {
        let step = frac(&[(0, 1), (-2 * n, -1)], &[(0, 1), (-2 * (n + 1), -1)]);
        assert_eq!(
            haar_zeta_closed(n as i64).unwrap(),
            &step * &haar_zeta_closed(n as i64 - 1).unwrap()
        );
    }
}

#[test]
fn solver_matches_zeta_closed_form() {
    let alg = Algebra::new(2).unwrap();
    let haar = Haar::new(&alg);
    let mut cache = HaarCache::new(2);
    let b = g(&alg, 1, 2);
    let bsb = alg.mul(&alg.star(&b).unwrap(), &b).unwrap();
    assert_eq!(bsb, zeta(&alg).unwrap());
    for n in 1..=5u32 {
        let x = alg.pow(&bsb, n).unwrap();
        assert_eq!(haar.haar(&x, &mut cache).unwrap(), haar_zeta_closed(n as i64).unwrap());
    }
}

#[test]
fn closed_norm_examples() {
    let q4 = qint(4).unwrap();
    assert_eq!(fundamental_norm_l(4, 1).unwrap(), QScalar::qpow(3).checked_div(&q4).unwrap());
    assert_eq!(fundamental_norm_l(2, 1).unwrap(), frac(&[(2, 1)], &[(2, 1), (0, 1)]));
    assert_eq!(fundamental_norm_r(2, 2).unwrap(), fundamental_norm_l(2, 1).unwrap());
    assert_eq!(ket_normalizer_sq(4, 1).unwrap(), &QScalar::qpow(-3) * &q4);
    assert_eq!(ket_normalizer_sq(2, 1).unwrap(), fundamental_norm_l(2, 1).unwrap().inv().unwrap());
    assert!(fundamental_norm_l(3, 0).is_err());
    assert!(fundamental_norm_r(3, 4).is_err());
    for n in 2..=5usize {
        for i in 1..=n {
            let one = rat(1);
            let at_one = fundamental_norm_l(n, i).unwrap().eval_at(&one).unwrap();
            assert_eq!(at_one, ratio(1, n as i64));
            assert_eq!(ket_normalizer_sq(n, i).unwrap().eval_at(&one).unwrap(), rat(n as i64));
        }
    }
}

fn check_fundamental_norms(n: usize) {
    let alg = Algebra::new(n).unwrap();
    let haar = Haar::new(&alg);
    let mut cache = HaarCache::new(n);
    for i in 1..=n {
        for j in 1..=n {
            let u = g(&alg, i, j);
            assert_eq!(haar.inner_l(&u, &u, &mut cache).unwrap(), fundamental_norm_l(n, i).unwrap());
            assert_eq!(haar.inner_r(&u, &u, &mut cache).unwrap(), fundamental_norm_r(n, j).unwrap());
        }
    }
}

#[test]
fn fundamental_norms_n2_n3() {
    check_fundamental_norms(2);
    check_fundamental_norms(3);
}

#[test]
fn fundamental_norms_n4() {
    check_fundamental_norms(4);
}

#[test]
fn orthogonality_of_matrix_coefficients() {
    for n in 2..=3 {
        let alg = Algebra::new(n).unwrap();
        let haar = Haar::new(&alg);
        let mut cache = HaarCache::new(n);
        let idx: Vec<_> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        for &(i, j) in &idx {
            for &(k, l) in &idx {
                if (i, j) == (k, l) {
                    continue;
                }
                let (x, y) = (g(&alg, i, j), g(&alg, k, l));
                assert!(haar.inner_l(&x, &y, &mut cache).unwrap().is_zero());
                assert!(haar.inner_r(&x, &y, &mut cache).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn invariance_on_bi_invariant_basis() {
    for (n, max) in [(2usize, 4usize), (3, 3)] {
        let alg = Algebra::new(n).unwrap();
        let haar = Haar::new(&alg);
        let mut cache = HaarCache::new(n);
        for d in (0..=max).filter(|d| d % n == 0) {
            for m in crate::grading::bi_invariant_monomials(n, d) {
                let x = AlgElement::monomial(n, m).unwrap();
                let hx = haar.haar(&x, &mut cache).unwrap();
                let dx = alg.coproduct(&x).unwrap();
                assert_eq!(haar.apply_right(&dx, &mut cache).unwrap(), alg.scalar(hx.clone()));
                assert_eq!(haar.apply_left(&dx, &mut cache).unwrap(), alg.scalar(hx));
            }
        }
    }
}

#[test]
fn unprojected_solver_agrees_and_vanishes() {
    let alg = Algebra::new(2).unwrap();
    let haar = Haar::new(&alg);
    let mut cache = HaarCache::new(2);
    let mut table = FullTable::new();
    for d in 0..=4 {
        for m in alg.normal_monomials(d) {
            let x = AlgElement::monomial(2, m.clone()).unwrap();
            let full = haar.haar_unprojected(&x, &mut table).unwrap();
            if crate::grading::is_bi_invariant(&m, 2) {
                assert_eq!(full, haar.haar(&x, &mut cache).unwrap());
            } else {
                assert!(full.is_zero(), "{m:?}");
            }
        }
    }
}

#[test]
fn degree_guard_and_cache_checks() {
    let alg = Algebra::new(2).unwrap();
    let opts = HaarOptions { max_degree: 2, sample_q: None };
    let haar = Haar::with_options(&alg, opts);
    let mut cache = HaarCache::new(2);
    let z = zeta(&alg).unwrap();
    assert!(haar.haar(&z, &mut cache).is_ok());
    let z2 = alg.pow(&z, 2).unwrap();
    assert!(matches!(haar.haar(&z2, &mut cache), Err(Error::DegreeGuard { degree: 4, max: 2 })));
    let mut wrong = HaarCache::new(3);
    assert!(haar.haar(&z, &mut wrong).is_err());

    let bad = [(Monomial::one(), QScalar::one()), (word(&alg, &[(1, 1)]).terms().keys().next().unwrap().clone(), QScalar::one())];
    assert!(HaarCache::from_parts(2, bad.into_iter().collect(), 1).is_err());
    assert!(HaarCache::from_parts(2, BTreeMap::new(), 0).is_err());
    let rebuilt = HaarCache::from_parts(2, cache.values().clone(), cache.solved_degree()).unwrap();
    assert_eq!(rebuilt, cache);
}

#[test]
fn symbolic_only_matches_sampled() {
    let alg = Algebra::new(2).unwrap();
    let plain = Haar::with_options(&alg, HaarOptions { max_degree: 6, sample_q: None });
    let sampled = Haar::new(&alg);
    let (mut c1, mut c2) = (HaarCache::new(2), HaarCache::new(2));
    let x = word(&alg, &[(1, 1), (1, 1), (1, 2), (2, 1), (2, 2), (2, 2)]);
    assert_eq!(plain.haar(&x, &mut c1).unwrap(), sampled.haar(&x, &mut c2).unwrap());
    assert_eq!(c1, c2);
}

#[test]
fn pochhammer_and_ks_expansion() {
    let alg = Algebra::new(2).unwrap();
    let z = zeta(&alg).unwrap();
    assert_eq!(q_pochhammer(&alg, &z, &QScalar::q(), 0).unwrap(), alg.one());
    let one = alg.one();
    let n1 = &TensorElement::from_pair(&z, &(&one - &z.scale(&QScalar::qpow(-2)))).unwrap()
        + &TensorElement::from_pair(&(&one - &z), &z).unwrap();
    assert_eq!(ks_projection_expansion(&alg, 1).unwrap(), n1);
    for n in 1..=3 {
        let zn = alg.pow(&z, n).unwrap();
        let projected = crate::grading::tensor_project_right(&alg.coproduct(&zn).unwrap());
        assert_eq!(ks_projection_expansion(&alg, n).unwrap(), projected, "n = {n}");
    }
    assert!(ks_projection_expansion(&alg, 0).is_err());
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    proptest::collection::vec((1usize..=3, 1usize..=3), 0..=max_len)
}

fn clip(n: usize, w: &[(usize, usize)]) -> Vec<(usize, usize)> {
    w.iter().map(|&(i, j)| ((i - 1) % n + 1, (j - 1) % n + 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn modular_property(n in 2usize..=3, x in word_strategy(4), y in word_strategy(4)) {
        let alg = Algebra::new(n).unwrap();
        let haar = Haar::new(&alg);
        let mut cache = HaarCache::new(n);
        let limit = if n == 2 { 4 } else { 3 };
        let (x, y) = (clip(n, &x), clip(n, &y));
        let split = x.len().min(limit);
        let rest = limit - split;
        let (x, y) = (word(&alg, &x[..split]), word(&alg, &y[..y.len().min(rest)]));
        let lhs = haar.haar(&alg.mul(&x, &y).unwrap(), &mut cache).unwrap();
        let rhs = haar.haar(&alg.mul(&alg.theta(&y).unwrap(), &x).unwrap(), &mut cache).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_adjunctions(x in word_strategy(1), y in word_strategy(2), z in word_strategy(1)) {
        let alg = Algebra::new(2).unwrap();
        let haar = Haar::new(&alg);
        let mut cache = HaarCache::new(2);
        let (x, y, z) = (word(&alg, &clip(2, &x)), word(&alg, &clip(2, &y)), word(&alg, &clip(2, &z)));
        let zs = alg.star(&z).unwrap();
        let xz = alg.mul(&x, &z).unwrap();
        let yzs = alg.mul(&y, &zs).unwrap();
        prop_assert_eq!(haar.inner_r(&xz, &y, &mut cache).unwrap(), haar.inner_r(&x, &yzs, &mut cache).unwrap());
        let zx = alg.mul(&z, &x).unwrap();
        let zsy = alg.mul(&zs, &y).unwrap();
        prop_assert_eq!(haar.inner_l(&zx, &y, &mut cache).unwrap(), haar.inner_l(&x, &zsy, &mut cache).unwrap());
        let ty = alg.theta(&y).unwrap();
        prop_assert_eq!(haar.inner_l(&x, &y, &mut cache).unwrap(), haar.inner_r(&ty, &x, &mut cache).unwrap());
    }

    #[test]
    fn positivity_at_samples(
        terms in proptest::collection::vec((word_strategy(2), -5i64..=5), 1..4),
        q0 in prop::sample::select(alloc::vec![ratio(1, 2), rat(2), ratio(7, 5)]),
    ) {
        let alg = Algebra::new(2).unwrap();
        let haar = Haar::new(&alg);
        let mut cache = HaarCache::new(2);
        let x = terms.iter().fold(alg.zero(), |acc, (w, c)| {
            &acc + &word(&alg, &clip(2, w)).scale(&QScalar::from_int(*c))
        });
        prop_assume!(!x.is_zero());
        let v = haar.inner_l(&x, &x, &mut cache).unwrap().eval_at(&q0).unwrap();
        prop_assert!(v > rat(0));
    }
}

#[test]
fn cache_merge_is_idempotent() {
    let alg = Algebra::new(2).unwrap();
    let haar = Haar::new(&alg);
    let (mut small, mut big) = (HaarCache::new(2), HaarCache::new(2));
    let z = zeta(&alg).unwrap();
    haar.haar(&z, &mut small).unwrap();
    haar.haar(&alg.pow(&z, 2).unwrap(), &mut big).unwrap();
    let mut merged = small.clone();
    merged.merge(&big).unwrap();
    merged.merge(&big).unwrap();
    assert_eq!(merged, big);
    let mut forged = BTreeMap::new();
    forged.insert(Monomial::one(), QScalar::one());
    let bc = alg.mul(&g(&alg, 1, 2), &g(&alg, 2, 1)).unwrap();
    forged.insert(bc.terms().keys().next().unwrap().clone(), QScalar::from_int(7));
    let forged = HaarCache::from_parts(2, forged, 2).unwrap();
    assert!(merged.merge(&forged).is_err());
    assert!(merged.merge(&HaarCache::new(3)).is_err());
}

#[test]
fn reduced_words() {
    let w = |l: &[(usize, usize)]| {
        Monomial::normal(l.iter().map(|&(i, j)| crate::Gen::new(i, j, 3).unwrap()).collect()).unwrap()
    };
    assert!(w(&[(1, 1), (1, 2)]).is_reduced(2));
    assert!(!w(&[(1, 1), (2, 2)]).is_reduced(2));
    assert!(!w(&[(1, 1), (3, 3)]).is_reduced(2));
}
