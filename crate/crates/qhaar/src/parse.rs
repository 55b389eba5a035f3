//! Surface syntax for algebra elements.
//!
//! ```text
//! sum      := product (('+' | '-') product)*
//! product  := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := adjoint ('^' '-'? INT)?
//! adjoint  := atom '\''*
//! atom     := INT | 'q' | 'u' '[' INT ',' INT ']' | 'a' | 'b' | 'c' | 'd' | '(' sum ')'
//! ```
//!
//! Multiplication is explicit and keeps operand order. Division and negative
//! exponents are only accepted on scalar subexpressions, and the letters
//! `a, b, c, d` name `u[1,1], u[1,2], u[2,1], u[2,2]` only when N = 2.

use num_bigint::BigInt;
use qhaar_core::{AlgElement, Algebra, QScalar, Rational};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen(usize, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
    Adjoint(Box<Expr>),
}

impl Expr {
    /// True when the expression contains no generator.
    pub fn is_scalar(&self) -> bool {
        match self {
            Expr::Int(_) | Expr::Q => true,
            Expr::Gen(..) => false,
            Expr::Neg(x) | Expr::Pow(x, _) | Expr::Adjoint(x) => x.is_scalar(),
            Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
                x.is_scalar() && y.is_scalar()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {ch:?} at column {col}")]
    BadChar { ch: char, col: usize },
    #[error("expected {expected} at column {col}, found {found}")]
    Expected { expected: &'static str, found: String, col: usize },
    #[error("missing '*' between factors at column {col}")]
    Juxtaposition { col: usize },
    #[error("unknown name {name:?} at column {col}")]
    UnknownName { name: String, col: usize },
    #[error("'{name}' is only defined for N = 2 (column {col}); use u[i,j]")]
    AliasNeedsN2 { name: String, col: usize },
    #[error("generator u[{row},{col_index}] out of range for N = {n} at column {col}")]
    IndexOutOfRange { row: usize, col_index: usize, n: usize, col: usize },
    #[error("negative exponent on a non-scalar at column {col}")]
    NegativeExponent { col: usize },
    #[error("exponent too large at column {col}")]
    ExponentTooLarge { col: usize },
    #[error("divisor at column {col} is not a scalar")]
    NonScalarDivisor { col: usize },
    #[error("{0}")]
    Engine(#[from] qhaar_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number {v}"),
            Tok::Name(s) => format!("name {s:?}"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::End => "end of input".into(),
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self, Tok::Int(_) | Tok::Name(_) | Tok::Sym('('))
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        let col = text[..pos].chars().count() + 1;
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let digits: String = chars[start..k].iter().map(|&(_, c)| c).collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((Tok::Name(chars[start..k].iter().map(|&(_, c)| c).collect()), col));
        } else if "+-*/^'()[],".contains(ch) {
            out.push((Tok::Sym(ch), col));
            k += 1;
        } else {
            return Err(ParseError::BadChar { ch, col });
        }
    }
    let end = text.chars().count() + 1;
    out.push((Tok::End, end));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    n: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn col(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect_sym(&mut self, c: char, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.expected(expected))
        }
    }

    fn expected(&self, expected: &'static str) -> ParseError {
        ParseError::Expected { expected, found: self.peek().describe(), col: self.col() }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Tok::Sym('-') => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Sym('/') => {
                    let col = self.bump().1;
                    let rhs = self.unary()?;
                    if !rhs.is_scalar() {
                        return Err(ParseError::NonScalarDivisor { col });
                    }
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                t if t.starts_atom() => return Err(ParseError::Juxtaposition { col: self.col() }),
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Sym('-') {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.adjoint()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        let col = self.bump().1;
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.bump();
        }
        let Tok::Int(e) = self.peek().clone() else {
            return Err(self.expected("an integer exponent"));
        };
        self.bump();
        let e: i32 = i32::try_from(&e).map_err(|_| ParseError::ExponentTooLarge { col })?;
        if negative && !base.is_scalar() {
            return Err(ParseError::NegativeExponent { col });
        }
        Ok(Expr::Pow(Box::new(base), if negative { -e } else { e }))
    }

    fn adjoint(&mut self) -> Result<Expr, ParseError> {
        let mut x = self.atom()?;
        while *self.peek() == Tok::Sym('\'') {
            self.bump();
            x = Expr::Adjoint(Box::new(x));
        }
        Ok(x)
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                self.bump();
                Ok(usize::try_from(&v).unwrap_or(usize::MAX))
            }
            _ => Err(self.expected("an index")),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, col) = self.bump();
        match tok {
            Tok::Int(v) => Ok(Expr::Int(v)),
            Tok::Sym('(') => {
                let inner = self.sum()?;
                self.expect_sym(')', "')'")?;
                Ok(inner)
            }
            Tok::Name(name) => match name.as_str() {
                "q" => Ok(Expr::Q),
                "u" => {
                    self.expect_sym('[', "'['")?;
                    let i = self.index()?;
                    self.expect_sym(',', "','")?;
                    let j = self.index()?;
                    self.expect_sym(']', "']'")?;
                    if i == 0 || j == 0 || i > self.n || j > self.n {
                        return Err(ParseError::IndexOutOfRange { row: i, col_index: j, n: self.n, col });
                    }
                    Ok(Expr::Gen(i, j))
                }
                "a" | "b" | "c" | "d" => {
                    if self.n != 2 {
                        return Err(ParseError::AliasNeedsN2 { name, col });
                    }
                    let k = (name.as_bytes()[0] - b'a') as usize;
                    Ok(Expr::Gen(k / 2 + 1, k % 2 + 1))
                }
                _ => Err(ParseError::UnknownName { name, col }),
            },
            other => {
                Err(ParseError::Expected { expected: "a number, q, a generator or '('", found: other.describe(), col })
            }
        }
    }
}

/// Parses `text` for matrix size `n` without evaluating it.
pub fn parse_expr(text: &str, n: usize) -> Result<Expr, ParseError> {
    if n < 2 {
        return Err(qhaar_core::Error::Domain("matrix size N must be at least 2").into());
    }
    let mut p = Parser { toks: lex(text)?, at: 0, n };
    let e = p.sum()?;
    match p.peek() {
        Tok::End => Ok(e),
        t if t.starts_atom() => Err(ParseError::Juxtaposition { col: p.col() }),
        _ => Err(p.expected("an operator or end of input")),
    }
}

enum Val {
    S(QScalar),
    E(AlgElement),
}

impl Val {
    fn into_element(self, alg: &Algebra) -> AlgElement {
        match self {
            Val::S(s) => alg.scalar(s),
            Val::E(e) => e,
        }
    }
}

fn eval_val(e: &Expr, alg: &Algebra) -> Result<Val, qhaar_core::Error> {
    use Val::{E, S};
    Ok(match e {
        Expr::Int(v) => S(QScalar::from_rational(Rational::from_integer(v.clone()))),
        Expr::Q => S(QScalar::q()),
        Expr::Gen(i, j) => E(alg.generator(*i, *j)?),
        Expr::Neg(x) => match eval_val(x, alg)? {
            S(s) => S(-&s),
            E(x) => E(-&x),
        },
        Expr::Add(x, y) | Expr::Sub(x, y) => {
            let sub = matches!(e, Expr::Sub(..));
            match (eval_val(x, alg)?, eval_val(y, alg)?) {
                (S(a), S(b)) => S(if sub { &a - &b } else { &a + &b }),
                (a, b) => {
                    let (a, b) = (a.into_element(alg), b.into_element(alg));
                    E(if sub { &a - &b } else { &a + &b })
                }
            }
        }
        Expr::Mul(x, y) => match (eval_val(x, alg)?, eval_val(y, alg)?) {
            (S(a), S(b)) => S(&a * &b),
            (S(a), E(b)) | (E(b), S(a)) => E(b.scale(&a)),
            (E(a), E(b)) => E(alg.mul(&a, &b)?),
        },
        Expr::Div(x, y) => {
            let S(d) = eval_val(y, alg)? else {
                return Err(qhaar_core::Error::Domain("divisor is not a scalar"));
            };
            let inv = d.inv()?;
            match eval_val(x, alg)? {
                S(a) => S(&a * &inv),
                E(a) => E(a.scale(&inv)),
            }
        }
        Expr::Pow(x, k) => match eval_val(x, alg)? {
            S(s) => S(s.pow(*k)?),
            E(a) => {
                let k = u32::try_from(*k).map_err(|_| qhaar_core::Error::Domain("negative exponent"))?;
                E(alg.pow(&a, k)?)
            }
        },
        Expr::Adjoint(x) => match eval_val(x, alg)? {
            S(s) => S(s),
            E(a) => E(alg.star(&a)?),
        },
    })
}

/// Evaluates a parsed expression to its normal form.
pub fn eval(e: &Expr, alg: &Algebra) -> Result<AlgElement, ParseError> {
    Ok(eval_val(e, alg)?.into_element(alg))
}

/// Parses and evaluates `text` in `alg`.
pub fn parse(text: &str, alg: &Algebra) -> Result<AlgElement, ParseError> {
    eval(&parse_expr(text, alg.n())?, alg)
}
