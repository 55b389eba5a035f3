use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::algebra::Algebra;
use crate::QScalar;

fn bd(alpha: &[i32], beta: &[i32]) -> BiDegree {
    BiDegree::new(alpha.to_vec(), beta.to_vec())
}

fn mono(alg: &Algebra, w: &[(usize, usize)]) -> Monomial {
    let mut letters: Vec<Gen> = w.iter().map(|&(i, j)| alg.gen(i, j).unwrap()).collect();
    letters.sort();
    Monomial::normal(letters).unwrap()
}

#[test]
fn generator_bidegrees() {
    let alg = Algebra::new(2).unwrap();
    assert_eq!(bidegree(&mono(&alg, &[(1, 1)]), 2), bd(&[1], &[1]));
    assert_eq!(bidegree(&mono(&alg, &[(1, 2)]), 2), bd(&[1], &[-1]));
    assert_eq!(bidegree(&mono(&alg, &[(2, 1)]), 2), bd(&[-1], &[1]));
    assert_eq!(bidegree(&mono(&alg, &[(2, 2)]), 2), bd(&[-1], &[-1]));
    let alg3 = Algebra::new(3).unwrap();
    assert_eq!(bidegree(&mono(&alg3, &[(3, 3)]), 3), bd(&[-1, -1], &[-1, -1]));
}

#[test]
fn fundamental_matches_t_indexing_for_sl2() {
    // u_ij ∈ A[-2 i0, -2 j0] with i0 = i - 3/2
    let alg = Algebra::new(2).unwrap();
    for i in 1..=2 {
        for j in 1..=2 {
            let (i2, j2) = (2 * i as i32 - 3, 2 * j as i32 - 3);
            assert_eq!(bidegree(&mono(&alg, &[(i, j)]), 2), bd(&[-i2], &[-j2]));
        }
    }
}

#[test]
fn decompose_and_project() {
    let alg = Algebra::new(2).unwrap();
    let a = alg.generator(1, 1).unwrap();
    let b = alg.generator(1, 2).unwrap();
    let d = alg.generator(2, 2).unwrap();
    let parts = decompose(&(&a + &b));
    assert_eq!(parts.len(), 2);
    assert_eq!(parts[&bd(&[1], &[1])], a);
    assert_eq!(parts[&bd(&[1], &[-1])], b);
    let one_parts = decompose(&alg.one());
    assert_eq!(one_parts.into_iter().collect::<Vec<_>>(), vec![(BiDegree::zero(2), alg.one())]);
    let ad = alg.mul(&a, &d).unwrap();
    let parts = decompose(&ad);
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[&BiDegree::zero(2)], ad);

    assert!(project_00(&a).is_zero());
    let bc = alg.word(&[alg.gen(1, 2).unwrap(), alg.gen(2, 1).unwrap()]).unwrap();
    let x = &(&alg.one() + &a) + &bc.scale(&QScalar::q());
    assert_eq!(project_00(&x), &alg.one() + &bc.scale(&QScalar::q()));
    assert_eq!(project_00(&project_00(&x)), project_00(&x));
}

#[test]
fn tensor_projection_examples() {
    let alg = Algebra::new(2).unwrap();
    let a = alg.generator(1, 1).unwrap();
    assert!(tensor_project_right(&alg.coproduct(&a).unwrap()).is_zero());
    assert_eq!(tensor_project_right(&TensorElement::one(2)), TensorElement::one(2));
    let ad = alg.mul(&a, &alg.generator(2, 2).unwrap()).unwrap();
    let bc = alg.word(&[alg.gen(1, 2).unwrap(), alg.gen(2, 1).unwrap()]).unwrap();
    let t = TensorElement::from_pair(&ad, &bc).unwrap();
    assert_eq!(tensor_project_right(&t), t);
}

#[test]
fn bi_invariant_enumeration_matches_brute_force() {
    for n in 2..=3 {
        let alg = Algebra::new(n).unwrap();
        for degree in 0..=6 {
            let mut brute: Vec<Monomial> = alg
                .normal_monomials(degree)
                .into_iter()
                .filter(|m| is_bi_invariant(m, n))
                .collect();
            brute.sort();
            assert_eq!(bi_invariant_monomials(n, degree), brute, "N={n} degree={degree}");
        }
    }
    // SL_q(2): A[0,0] in degree 2k is spanned by b^k c^k
    assert_eq!(bi_invariant_monomials(2, 6).len(), 1);
    // SL_q(4), degree 4: the 24 permutation words minus the diagonal
    assert_eq!(bi_invariant_monomials(4, 4).len(), 23);
}

fn word_strategy(max_len: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    proptest::collection::vec((1usize..=3, 1usize..=3), 0..=max_len)
}

fn clip(n: usize, w: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    w.into_iter().map(|(i, j)| ((i - 1) % n + 1, (j - 1) % n + 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bidegree_additive(n in 2usize..=3, x in word_strategy(4), y in word_strategy(4)) {
        let alg = Algebra::new(n).unwrap();
        let (mx, my) = (mono(&alg, &clip(n, x)), mono(&alg, &clip(n, y)));
        let expected = &bidegree(&mx, n) + &bidegree(&my, n);
        let product = alg.mul(&AlgElement::monomial(n, mx).unwrap(), &AlgElement::monomial(n, my).unwrap()).unwrap();
        for m in product.terms().keys() {
            prop_assert_eq!(&bidegree(m, n), &expected);
        }
    }

    #[test]
    fn star_and_antipode_act_on_grades(n in 2usize..=3, x in word_strategy(4)) {
        let alg = Algebra::new(n).unwrap();
        let m = mono(&alg, &clip(n, x));
        let deg = bidegree(&m, n);
        let x = AlgElement::monomial(n, m).unwrap();
        let star_keys: Vec<BiDegree> = decompose(&alg.star(&x).unwrap()).into_keys().collect();
        prop_assert_eq!(star_keys, vec![-&deg]);
        let s_keys: Vec<BiDegree> = decompose(&alg.antipode(&x).unwrap()).into_keys().collect();
        prop_assert_eq!(s_keys, vec![deg.antipodal()]);
    }

    #[test]
    fn decomposition_reconstructs(n in 2usize..=3, ws in proptest::collection::vec(word_strategy(4), 1..5)) {
        let alg = Algebra::new(n).unwrap();
        let x = ws.into_iter().fold(alg.zero(), |acc, w| {
            let letters: Vec<Gen> = clip(n, w).iter().map(|&(i, j)| alg.gen(i, j).unwrap()).collect();
            &acc + &alg.word(&letters).unwrap()
        });
        let parts = decompose(&x);
        let sum = parts.values().fold(alg.zero(), |acc, p| &acc + p);
        prop_assert_eq!(sum, x);
        for (d, p) in &parts {
            prop_assert!(!p.is_zero());
            prop_assert!(p.terms().keys().all(|m| &bidegree(m, n) == d));
        }
    }
}
