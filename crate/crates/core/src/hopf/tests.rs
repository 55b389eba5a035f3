use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::qcoeff::rat;

fn g(alg: &Algebra, i: usize, j: usize) -> AlgElement {
    alg.generator(i, j).unwrap()
}

fn prod(alg: &Algebra, xs: &[&AlgElement]) -> AlgElement {
    alg.product(xs.iter().copied()).unwrap()
}

fn all_gens(alg: &Algebra) -> Vec<AlgElement> {
    let n = alg.n();
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).map(|(i, j)| g(alg, i, j)).collect()
}

fn tp(x: &AlgElement, y: &AlgElement) -> TensorElement {
    TensorElement::from_pair(x, y).unwrap()
}

#[test]
fn coproduct_examples() {
    let alg = Algebra::new(2).unwrap();
    let (a, b, c, d) = (g(&alg, 1, 1), g(&alg, 1, 2), g(&alg, 2, 1), g(&alg, 2, 2));
    assert_eq!(alg.coproduct(&a).unwrap(), &tp(&a, &a) + &tp(&b, &c));
    assert_eq!(alg.coproduct(&alg.one()).unwrap(), TensorElement::one(2));
    let zeta = prod(&alg, &[&b, &c]).scale(&-QScalar::q());
    let expected = [
        tp(&prod(&alg, &[&a, &c]), &prod(&alg, &[&b, &a])),
        tp(&prod(&alg, &[&a, &d]), &prod(&alg, &[&b, &c])),
        tp(&prod(&alg, &[&b, &c]), &prod(&alg, &[&d, &a])),
        tp(&prod(&alg, &[&b, &d]), &prod(&alg, &[&d, &c])),
    ]
    .iter()
    .fold(TensorElement::zero(2), |acc, t| &acc + t)
    .scale(&-QScalar::q());
    assert_eq!(alg.coproduct(&zeta).unwrap(), expected);
}

#[test]
fn counit_examples() {
    let alg = Algebra::new(2).unwrap();
    let (a, b, d) = (g(&alg, 1, 1), g(&alg, 1, 2), g(&alg, 2, 2));
    assert_eq!(alg.counit(&a).unwrap(), QScalar::one());
    assert_eq!(alg.counit(&b).unwrap(), QScalar::zero());
    assert_eq!(alg.counit(&prod(&alg, &[&a, &d])).unwrap(), QScalar::one());
    let alg3 = Algebra::new(3).unwrap();
    assert_eq!(alg3.counit(&alg3.quantum_det_unreduced()).unwrap(), QScalar::one());
}

#[test]
fn antipode_star_theta_examples() {
    let alg = Algebra::new(2).unwrap();
    let (a, b, c, d) = (g(&alg, 1, 1), g(&alg, 1, 2), g(&alg, 2, 1), g(&alg, 2, 2));
    let q = QScalar::q();
    assert_eq!(alg.antipode(&a).unwrap(), d);
    assert_eq!(alg.antipode(&b).unwrap(), b.scale(&-QScalar::qpow(-1)));
    assert_eq!(alg.antipode(&c).unwrap(), c.scale(&-q.clone()));
    assert_eq!(alg.antipode(&d).unwrap(), a);
    assert_eq!(alg.star(&b).unwrap(), c.scale(&-q.clone()));
    assert_eq!(alg.star(&a).unwrap(), d);
    assert_eq!(alg.theta(&a).unwrap(), a.scale(&QScalar::qpow(2)));
    assert_eq!(alg.theta(&b).unwrap(), b);
    assert_eq!(alg.theta(&c).unwrap(), c);
    assert_eq!(alg.theta(&d).unwrap(), d.scale(&QScalar::qpow(-2)));

    let alg3 = Algebra::new(3).unwrap();
    let u13 = g(&alg3, 1, 3);
    assert_eq!(alg3.star(&alg3.star(&u13).unwrap()).unwrap(), u13);
    let alg4 = Algebra::new(4).unwrap();
    let u14 = g(&alg4, 1, 4);
    assert_eq!(alg4.theta(&u14).unwrap(), u14);
}

#[test]
fn theta_fixes_quantum_determinant() {
    for n in 2..=4 {
        let alg = Algebra::new(n).unwrap();
        let det = alg.quantum_det_unreduced();
        assert_eq!(alg.theta(&det).unwrap(), det);
    }
}

#[test]
fn counit_and_antipode_axioms_on_generators() {
    for n in 2..=4 {
        let alg = Algebra::new(n).unwrap();
        for x in all_gens(&alg) {
            let dx = alg.coproduct(&x).unwrap();
            let eps = alg.counit(&x).unwrap();
            assert_eq!(alg.apply_left(&dx, |m| Ok(alg.counit_monomial(m))).unwrap(), x);
            assert_eq!(alg.apply_right(&dx, |m| Ok(alg.counit_monomial(m))).unwrap(), x);
            let s_id = alg.multiply_legs(&dx, |l| alg.antipode(l), |r| Ok(r.clone())).unwrap();
            let id_s = alg.multiply_legs(&dx, |l| Ok(l.clone()), |r| alg.antipode(r)).unwrap();
            assert_eq!(s_id, alg.scalar(eps.clone()), "N={n}");
            assert_eq!(id_s, alg.scalar(eps), "N={n}");
        }
    }
}

#[test]
fn coassociativity_on_generators() {
    for n in 2..=3 {
        let alg = Algebra::new(n).unwrap();
        for x in all_gens(&alg) {
            let dx = alg.coproduct(&x).unwrap();
            assert_eq!(alg.coproduct_left_leg(&dx), alg.coproduct_right_leg(&dx));
        }
    }
}

#[test]
fn unitarity_of_fundamental_matrix() {
    for n in 2..=4 {
        let alg = Algebra::new(n).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let delta = if i == j { alg.one() } else { alg.zero() };
                let rows = (1..=n).fold(alg.zero(), |acc, k| {
                    let t = alg.mul(&g(&alg, i, k), &alg.star(&g(&alg, j, k)).unwrap()).unwrap();
                    &acc + &t
                });
                assert_eq!(rows, delta, "N={n} rows i={i} j={j}");
                let cols = (1..=n).fold(alg.zero(), |acc, k| {
                    let t = alg.mul(&alg.star(&g(&alg, k, i)).unwrap(), &g(&alg, k, j)).unwrap();
                    &acc + &t
                });
                assert_eq!(cols, delta, "N={n} cols i={i} j={j}");
            }
        }
    }
}

#[test]
fn coproduct_commutes_with_star_on_generators() {
    for n in 2..=3 {
        let alg = Algebra::new(n).unwrap();
        for x in all_gens(&alg) {
            let lhs = alg.coproduct(&alg.star(&x).unwrap()).unwrap();
            let rhs = alg.star_tensor(&alg.coproduct(&x).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

/// Terms as (word, integer coefficient, power of q).
type ElementSpec = Vec<(Vec<(usize, usize)>, i64, i32)>;

fn random_element(alg: &Algebra, spec: &ElementSpec) -> AlgElement {
    let n = alg.n();
    spec.iter().fold(alg.zero(), |acc, (w, c, e)| {
        let letters: Vec<Gen> =
            w.iter().map(|&(i, j)| alg.gen((i - 1) % n + 1, (j - 1) % n + 1).unwrap()).collect();
        let term = alg.word(&letters).unwrap().scale(&QScalar::qpow(*e).scale(&rat(*c)));
        &acc + &term
    })
}

fn element_strategy(max_deg: usize) -> impl Strategy<Value = ElementSpec> {
    proptest::collection::vec(
        (proptest::collection::vec((1usize..=4, 1usize..=4), 0..=max_deg), -3i64..=3, -2i32..=2),
        1..=3,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hopf_axioms_random_sl2(spec in element_strategy(3)) {
        let alg = Algebra::new(2).unwrap();
        let x = random_element(&alg, &spec);
        let dx = alg.coproduct(&x).unwrap();
        prop_assert_eq!(alg.coproduct_left_leg(&dx), alg.coproduct_right_leg(&dx));
        prop_assert_eq!(&alg.apply_left(&dx, |m| Ok(alg.counit_monomial(m))).unwrap(), &x);
        prop_assert_eq!(&alg.apply_right(&dx, |m| Ok(alg.counit_monomial(m))).unwrap(), &x);
        let eps = alg.scalar(alg.counit(&x).unwrap());
        prop_assert_eq!(&alg.multiply_legs(&dx, |l| alg.antipode(l), |r| Ok(r.clone())).unwrap(), &eps);
        prop_assert_eq!(&alg.multiply_legs(&dx, |l| Ok(l.clone()), |r| alg.antipode(r)).unwrap(), &eps);
    }

    #[test]
    fn coproduct_multiplicative(n in 2usize..=3, x in element_strategy(2), y in element_strategy(2)) {
        let alg = Algebra::new(n).unwrap();
        let (x, y) = (random_element(&alg, &x), random_element(&alg, &y));
        let lhs = alg.coproduct(&alg.mul(&x, &y).unwrap()).unwrap();
        let rhs = alg.tensor_mul(&alg.coproduct(&x).unwrap(), &alg.coproduct(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn star_involutive_and_antimultiplicative(n in 2usize..=3, x in element_strategy(2), y in element_strategy(2)) {
        let alg = Algebra::new(n).unwrap();
        let (x, y) = (random_element(&alg, &x), random_element(&alg, &y));
        prop_assert_eq!(&alg.star(&alg.star(&x).unwrap()).unwrap(), &x);
        let lhs = alg.star(&alg.mul(&x, &y).unwrap()).unwrap();
        let rhs = alg.mul(&alg.star(&y).unwrap(), &alg.star(&x).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_automorphism_and_star_inverse(n in 2usize..=3, x in element_strategy(3), y in element_strategy(2)) {
        let alg = Algebra::new(n).unwrap();
        let (x, y) = (random_element(&alg, &x), random_element(&alg, &y));
        let lhs = alg.theta(&alg.mul(&x, &y).unwrap()).unwrap();
        let rhs = alg.mul(&alg.theta(&x).unwrap(), &alg.theta(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        for m in x.terms().keys() {
            let mono = AlgElement::monomial(n, m.clone()).unwrap();
            let round = alg.theta(&alg.star(&alg.theta(&alg.star(&mono).unwrap()).unwrap()).unwrap()).unwrap();
            prop_assert_eq!(round, mono);
        }
    }
}
