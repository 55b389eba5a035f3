//! Command dispatch and rendering for the `qhaar` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qhaar_core::grading::decompose;
use qhaar_core::haar::{fundamental_norm_l, fundamental_norm_r};
use qhaar_core::{AlgElement, Algebra, BiDegree, Haar, HaarOptions, QScalar, Rational, TensorElement};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cache::{load_cache, save_cache};
use crate::json::{bidegree_to_json, element_to_json, scalar_to_json, tensor_to_json};
use crate::parse::{parse, ParseError};
use crate::verify::run_suite;
use crate::FormatError;

#[derive(Parser, Debug, Clone)]
#[command(name = "qhaar", version, about = "Exact computations in O(SL_q(N)) and the Haar state of SU_q(N)")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    /// Matrix size.
    #[arg(long = "N", global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Evaluate every scalar in the output at this rational value of q.
    #[arg(long, global = true, value_parser = parse_rational)]
    pub q: Option<Rational>,
    /// Largest word length the Haar solver may work at.
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<usize>,
    /// Haar cache file, read before and updated after solving.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Verb {
    /// Normal form of an expression.
    Nf { #[arg(allow_hyphen_values = true)] expr: String },
    /// Haar state of an expression.
    Haar { #[arg(allow_hyphen_values = true)] expr: String },
    /// Bigrading decomposition.
    Grade { #[arg(allow_hyphen_values = true)] expr: String },
    /// Coproduct.
    Cop { #[arg(allow_hyphen_values = true)] expr: String },
    /// Counit.
    Counit { #[arg(allow_hyphen_values = true)] expr: String },
    /// Antipode.
    Antipode { #[arg(allow_hyphen_values = true)] expr: String },
    /// The * involution.
    Star { #[arg(allow_hyphen_values = true)] expr: String },
    /// Modular automorphism.
    Theta { #[arg(allow_hyphen_values = true)] expr: String },
    /// Closed-form norms of the fundamental matrix coefficients.
    Norms { size: Option<usize> },
    /// Run the identity suite.
    Verify { size: Option<usize> },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|_| format!("not a rational number: {s:?}"))
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Engine(#[from] qhaar_core::Error),
    #[error("{0}")]
    Format(#[from] FormatError),
}

/// What the command printed and whether any check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, failed: false }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    alg: Algebra,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }

    fn eval(&self, x: &QScalar) -> Result<QScalar, CliError> {
        Ok(match &self.cli.q {
            Some(q0) => QScalar::from_rational(x.eval_at(q0)?),
            None => x.clone(),
        })
    }

    fn eval_element(&self, x: &AlgElement) -> Result<AlgElement, CliError> {
        if self.cli.q.is_none() {
            return Ok(x.clone());
        }
        let mut terms = Vec::with_capacity(x.len());
        for (m, c) in x.terms() {
            terms.push((m.clone(), self.eval(c)?));
        }
        Ok(AlgElement::from_terms(x.n(), terms)?)
    }

    fn eval_tensor(&self, t: &TensorElement) -> Result<TensorElement, CliError> {
        let mut terms = Vec::with_capacity(t.len());
        for (k, c) in t.terms() {
            terms.push((k.clone(), self.eval(c)?));
        }
        Ok(TensorElement::from_terms(t.n(), terms)?)
    }

    fn scalar_out(&self, x: &QScalar) -> Result<String, CliError> {
        let x = self.eval(x)?;
        Ok(if self.json() { to_json(&scalar_to_json(&x)) } else { format!("{x}\n") })
    }

    fn element_out(&self, x: &AlgElement) -> Result<String, CliError> {
        let x = self.eval_element(x)?;
        Ok(if self.json() { to_json(&element_to_json(&x)) } else { format!("{x}\n") })
    }

    fn options(&self) -> HaarOptions {
        let mut o = HaarOptions::for_size(self.alg.n());
        if let Some(d) = self.cli.max_degree {
            o.max_degree = d;
        }
        o
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Renders `t` as `c*x ⊗ y + ...`.
pub fn tensor_text(t: &TensorElement) -> String {
    if t.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, ((l, r), c)) in t.terms().iter().enumerate() {
        let left = AlgElement::from_terms(t.n(), [(l.clone(), c.clone())]).expect("valid leg").to_string();
        let right = AlgElement::from_terms(t.n(), [(r.clone(), QScalar::one())]).expect("valid leg");
        match (k, left.strip_prefix('-')) {
            (0, _) => out.push_str(&left),
            (_, Some(rest)) => write!(out, " - {rest}").unwrap(),
            (_, None) => write!(out, " + {left}").unwrap(),
        }
        write!(out, " ⊗ {right}").unwrap();
    }
    out
}

/// `[1, -1]` for N = 2, `[[1, 0], [-1, -1]]` otherwise.
pub fn bidegree_text(d: &BiDegree) -> String {
    let part = |v: &[i32]| match v {
        [x] => x.to_string(),
        _ => format!("[{}]", v.iter().map(i32::to_string).collect::<Vec<_>>().join(", ")),
    };
    format!("[{}, {}]", part(d.alpha()), part(d.beta()))
}

const GRADE_NOTE: &str = "note: b lies in A[1,-1] and c in A[-1,1]; the swapped assignment does not match the coproduct";

fn resolve_n(cli: &Cli, positional: Option<usize>) -> Result<usize, CliError> {
    match (positional, cli.n) {
        (Some(a), Some(b)) if a != b => Err(CliError::Usage(format!("N given twice: {a} and {b}"))),
        (Some(n), _) | (None, Some(n)) => Ok(n),
        (None, None) => Err(CliError::Usage("missing --N <size>".into())),
    }
}

/// Executes one command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let positional = match &cli.verb {
        Verb::Norms { size } | Verb::Verify { size } => *size,
        _ => None,
    };
    let n = resolve_n(cli, positional)?;
    let ctx = Ctx { cli, alg: Algebra::new(n)? };
    let alg = &ctx.alg;
    let out = match &cli.verb {
        Verb::Nf { expr } => ctx.element_out(&parse(expr, alg)?)?,
        Verb::Antipode { expr } => ctx.element_out(&alg.antipode(&parse(expr, alg)?)?)?,
        Verb::Star { expr } => ctx.element_out(&alg.star(&parse(expr, alg)?)?)?,
        Verb::Theta { expr } => ctx.element_out(&alg.theta(&parse(expr, alg)?)?)?,
        Verb::Counit { expr } => ctx.scalar_out(&alg.counit(&parse(expr, alg)?)?)?,
        Verb::Cop { expr } => {
            let t = ctx.eval_tensor(&alg.coproduct(&parse(expr, alg)?)?)?;
            if ctx.json() { to_json(&tensor_to_json(&t)) } else { format!("{}\n", tensor_text(&t)) }
        }
        Verb::Haar { expr } => {
            let x = parse(expr, alg)?;
            let haar = Haar::with_options(alg, ctx.options());
            let mut cache = match &cli.cache {
                Some(p) => load_cache(p, n)?,
                None => qhaar_core::HaarCache::new(n),
            };
            let before = cache.solved_degree();
            let v = haar.haar(&x, &mut cache)?;
            if let Some(p) = &cli.cache {
                if cache.solved_degree() > before || !p.exists() {
                    save_cache(p, &cache)?;
                }
            }
            ctx.scalar_out(&v)?
        }
        Verb::Grade { expr } => grade(&ctx, &parse(expr, alg)?)?,
        Verb::Norms { .. } => norms(&ctx)?,
        Verb::Verify { .. } => return verify(&ctx),
    };
    Ok(Outcome::ok(out))
}

fn grade(ctx: &Ctx, x: &AlgElement) -> Result<String, CliError> {
    let n = ctx.alg.n();
    let parts = decompose(x);
    let touches_bc = n == 2 && x.terms().keys().any(|m| m.letters().iter().any(|g| !g.is_diagonal()));
    let notes: Vec<&str> = if touches_bc { vec![GRADE_NOTE] } else { vec![] };
    if ctx.json() {
        let mut rendered = Vec::new();
        for (d, p) in &parts {
            rendered.push(json!({
                "bidegree": bidegree_to_json(d),
                "element": element_to_json(&ctx.eval_element(p)?),
            }));
        }
        return Ok(to_json(&json!({ "N": n, "parts": rendered, "notes": notes })));
    }
    let mut out = String::new();
    match parts.len() {
        0 => out.push_str("0 (no homogeneous parts)\n"),
        1 => writeln!(out, "{}", bidegree_text(parts.keys().next().unwrap())).unwrap(),
        _ => {
            for (d, p) in &parts {
                writeln!(out, "{}: {}", bidegree_text(d), ctx.eval_element(p)?).unwrap();
            }
        }
    }
    for note in notes {
        writeln!(out, "{note}").unwrap();
    }
    Ok(out)
}

fn norms(ctx: &Ctx) -> Result<String, CliError> {
    let n = ctx.alg.n();
    let mut rows = Vec::new();
    let mut text = format!("N = {n}\ni\tj\t<u_ij, u_ij>_L\t<u_ij, u_ij>_R\n");
    for i in 1..=n {
        for j in 1..=n {
            let l = ctx.eval(&fundamental_norm_l(n, i)?)?;
            let r = ctx.eval(&fundamental_norm_r(n, j)?)?;
            writeln!(text, "{i}\t{j}\t{l}\t{r}").unwrap();
            rows.push(json!({ "i": i, "j": j, "L": scalar_to_json(&l), "R": scalar_to_json(&r) }));
        }
    }
    Ok(if ctx.json() { to_json(&json!({ "N": n, "rows": rows })) } else { text })
}

fn verify(ctx: &Ctx) -> Result<Outcome, CliError> {
    let report = run_suite(ctx.alg.n(), Some(ctx.options()))?;
    let failed = !report.all_passed();
    if ctx.json() {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        let v = json!({ "N": report.n, "passed": !failed, "checks": checks, "notes": report.notes });
        return Ok(Outcome { stdout: to_json(&v), failed });
    }
    let mut out = format!("verify N = {}\n", report.n);
    for c in &report.checks {
        if c.passed {
            writeln!(out, "PASS  {}", c.name).unwrap();
        } else {
            writeln!(out, "FAIL  {}: {}", c.name, c.detail).unwrap();
        }
    }
    for note in &report.notes {
        writeln!(out, "{note}").unwrap();
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    writeln!(out, "{passed}/{} checks passed", report.checks.len()).unwrap();
    Ok(Outcome { stdout: out, failed })
}
