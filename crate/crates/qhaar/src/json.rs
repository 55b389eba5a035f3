//! JSON encodings of scalars, elements, tensors and bidegrees.
//!
//! Rationals are written as strings (`"3"`, `"-1/2"`) so that arbitrarily
//! large values survive a round trip unchanged. Laurent terms are listed in
//! ascending exponent order and element terms in monomial order, so encoding a
//! decoded value reproduces the input byte for byte.

use std::collections::BTreeMap;

use qhaar_core::{AlgElement, BiDegree, Gen, LaurentPoly, Monomial, QScalar, Rational, TensorElement};
use serde::{Deserialize, Serialize};

use crate::FormatError;

/// `{"num": [[exp, "p/q"], ...], "den": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub num: Vec<(i32, String)>,
    pub den: Vec<(i32, String)>,
}

/// A normal word as a list of `[row, col]` pairs.
pub type WordJson = Vec<[usize; 2]>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: WordJson,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermJson {
    pub left: WordJson,
    pub right: WordJson,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<TensorTermJson>,
}

/// `(alpha, beta)`, serialized as a pair of integer arrays.
pub type BiDegreeJson = (Vec<i32>, Vec<i32>);

fn poly_to_json(p: &LaurentPoly) -> Vec<(i32, String)> {
    p.terms().map(|(e, c)| (e, c.to_string())).collect()
}

fn poly_from_json(terms: &[(i32, String)]) -> Result<LaurentPoly, FormatError> {
    let mut seen = BTreeMap::new();
    for (e, s) in terms {
        let r: Rational = s.parse().map_err(|_| FormatError::Rational(s.clone()))?;
        if seen.insert(*e, r).is_some() {
            return Err(FormatError::Invalid(format!("exponent {e} listed twice")));
        }
    }
    Ok(LaurentPoly::from_terms(seen))
}

pub fn scalar_to_json(x: &QScalar) -> ScalarJson {
    ScalarJson { num: poly_to_json(x.num()), den: poly_to_json(x.den()) }
}

pub fn scalar_from_json(j: &ScalarJson) -> Result<QScalar, FormatError> {
    Ok(QScalar::new(poly_from_json(&j.num)?, poly_from_json(&j.den)?)?)
}

pub fn word_to_json(m: &Monomial) -> WordJson {
    m.letters().iter().map(|g| [g.row(), g.col()]).collect()
}

pub fn word_from_json(n: usize, w: &WordJson) -> Result<Monomial, FormatError> {
    let letters = w.iter().map(|&[i, j]| Gen::new(i, j, n)).collect::<Result<Vec<_>, _>>()?;
    let m = Monomial::normal(letters)?;
    if !m.is_reduced(n) {
        return Err(FormatError::Invalid("word contains a full diagonal and is not reduced".into()));
    }
    Ok(m)
}

pub fn element_to_json(x: &AlgElement) -> ElementJson {
    let terms = x
        .terms()
        .iter()
        .map(|(m, c)| TermJson { word: word_to_json(m), coeff: scalar_to_json(c) })
        .collect();
    ElementJson { n: x.n(), terms }
}

pub fn element_from_json(j: &ElementJson) -> Result<AlgElement, FormatError> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        terms.push((word_from_json(j.n, &t.word)?, scalar_from_json(&t.coeff)?));
    }
    check_distinct(terms.iter().map(|(m, _)| m))?;
    Ok(AlgElement::from_terms(j.n, terms)?)
}

pub fn tensor_to_json(t: &TensorElement) -> TensorJson {
    let terms = t
        .terms()
        .iter()
        .map(|((l, r), c)| TensorTermJson {
            left: word_to_json(l),
            right: word_to_json(r),
            coeff: scalar_to_json(c),
        })
        .collect();
    TensorJson { n: t.n(), terms }
}

pub fn tensor_from_json(j: &TensorJson) -> Result<TensorElement, FormatError> {
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        let key = (word_from_json(j.n, &t.left)?, word_from_json(j.n, &t.right)?);
        terms.push((key, scalar_from_json(&t.coeff)?));
    }
    check_distinct(terms.iter().map(|(k, _)| k))?;
    Ok(TensorElement::from_terms(j.n, terms)?)
}

fn check_distinct<'a, K: Ord + 'a>(keys: impl Iterator<Item = &'a K>) -> Result<(), FormatError> {
    let mut seen = std::collections::BTreeSet::new();
    for k in keys {
        if !seen.insert(k) {
            return Err(FormatError::Invalid("term listed twice".into()));
        }
    }
    Ok(())
}

pub fn bidegree_to_json(d: &BiDegree) -> BiDegreeJson {
    (d.alpha().to_vec(), d.beta().to_vec())
}

pub fn bidegree_from_json(j: &BiDegreeJson) -> Result<BiDegree, FormatError> {
    if j.0.len() != j.1.len() {
        return Err(FormatError::Invalid("alpha and beta differ in length".into()));
    }
    Ok(BiDegree::new(j.0.clone(), j.1.clone()))
}
