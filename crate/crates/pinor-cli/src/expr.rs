//! Surface syntax for gamma-monomial arithmetic.
//!
//! Tokens: `g0..g9`, `gh1..gh9`, `G5`, `P1 P3 T PT C AT H+ H-`, integers,
//! `i`, `+ - * ^`, `'` (reversion), `†` or `adj(...)`, parentheses.
//! Precedence: unary > power > product (juxtaposition or `*`) > sum.
//! Hatted and unhatted generators may not appear in one expression.

use pinor_core::clifford::{GammaRep, IndexConvention};
use pinor_core::conj::{antiunitary_t, canonical_c_sign, charge_conj, hermitian_similarity, SimilaritySign};
use pinor_core::cover::named_elements;
use pinor_core::matrix::ExactMatrix;
use pinor_core::scalar::GaussScalar;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedOp {
    P1,
    P3,
    T,
    PT,
    C,
    AT,
    HPlus,
    HMinus,
}

impl NamedOp {
    fn symbol(self) -> &'static str {
        match self {
            NamedOp::P1 => "P1",
            NamedOp::P3 => "P3",
            NamedOp::T => "T",
            NamedOp::PT => "PT",
            NamedOp::C => "C",
            NamedOp::AT => "AT",
            NamedOp::HPlus => "H+",
            NamedOp::HMinus => "H-",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Gamma { index: usize, hatted: bool },
    G5,
    Named(NamedOp),
    Scalar(GaussScalar),
    Product(Vec<Expr>),
    Sum(Vec<Expr>),
    Power(Box<Expr>, i64),
    Dagger(Box<Expr>),
    Reversion(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.position, self.message)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    ImagUnit,
    Gamma { index: usize, hatted: bool },
    G5,
    Named(NamedOp),
    Plus,
    Minus,
    Star,
    Caret,
    LPar,
    RPar,
    Prime,
    Dagger,
    Adj,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut out = vec![];
    let mut k = 0;
    let err = |pos: usize, msg: &str| ParseError {
        position: pos,
        message: msg.to_string(),
    };
    while k < chars.len() {
        let (pos, c) = chars[k];
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                out.push((pos, Tok::Plus));
                k += 1;
            }
            '-' => {
                out.push((pos, Tok::Minus));
                k += 1;
            }
            '*' => {
                out.push((pos, Tok::Star));
                k += 1;
            }
            '^' => {
                out.push((pos, Tok::Caret));
                k += 1;
            }
            '(' => {
                out.push((pos, Tok::LPar));
                k += 1;
            }
            ')' => {
                out.push((pos, Tok::RPar));
                k += 1;
            }
            '\'' => {
                out.push((pos, Tok::Prime));
                k += 1;
            }
            '†' => {
                out.push((pos, Tok::Dagger));
                k += 1;
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(chars[k].1 as i64 - '0' as i64))
                        .ok_or_else(|| err(pos, "integer literal overflows"))?;
                    k += 1;
                }
                out.push((pos, Tok::Int(v)));
            }
            'g' => {
                let hatted = k + 1 < chars.len() && chars[k + 1].1 == 'h';
                let digit_at = if hatted { k + 2 } else { k + 1 };
                match chars.get(digit_at) {
                    Some(&(_, d)) if d.is_ascii_digit() => {
                        out.push((
                            pos,
                            Tok::Gamma {
                                index: d as usize - '0' as usize,
                                hatted,
                            },
                        ));
                        k = digit_at + 1;
                    }
                    _ => return Err(err(pos, "expected a digit after 'g'")),
                }
            }
            'G' => match chars.get(k + 1) {
                Some(&(_, '5')) => {
                    out.push((pos, Tok::G5));
                    k += 2;
                }
                _ => return Err(err(pos, "expected '5' after 'G'")),
            },
            'P' => match chars.get(k + 1) {
                Some(&(_, '1')) => {
                    out.push((pos, Tok::Named(NamedOp::P1)));
                    k += 2;
                }
                Some(&(_, '3')) => {
                    out.push((pos, Tok::Named(NamedOp::P3)));
                    k += 2;
                }
                Some(&(_, 'T')) => {
                    out.push((pos, Tok::Named(NamedOp::PT)));
                    k += 2;
                }
                _ => return Err(err(pos, "expected '1', '3' or 'T' after 'P'")),
            },
            'T' => {
                out.push((pos, Tok::Named(NamedOp::T)));
                k += 1;
            }
            'C' => {
                out.push((pos, Tok::Named(NamedOp::C)));
                k += 1;
            }
            'A' => match chars.get(k + 1) {
                Some(&(_, 'T')) => {
                    out.push((pos, Tok::Named(NamedOp::AT)));
                    k += 2;
                }
                _ => return Err(err(pos, "expected 'T' after 'A'")),
            },
            'H' => match chars.get(k + 1) {
                Some(&(_, '+')) => {
                    out.push((pos, Tok::Named(NamedOp::HPlus)));
                    k += 2;
                }
                Some(&(_, '-')) => {
                    out.push((pos, Tok::Named(NamedOp::HMinus)));
                    k += 2;
                }
                _ => return Err(err(pos, "expected '+' or '-' after 'H'")),
            },
            'a' => {
                if input[pos..].starts_with("adj") {
                    out.push((pos, Tok::Adj));
                    k += 3;
                } else {
                    return Err(err(pos, "unknown word (did you mean 'adj'?)"));
                }
            }
            'i' => {
                out.push((pos, Tok::ImagUnit));
                k += 1;
            }
            other => return Err(err(pos, &format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.at += 1;
            Ok(())
        } else {
            Err(ParseError {
                position: self.pos(),
                message: format!("expected {what}"),
            })
        }
    }

    fn error(&self, msg: &str) -> ParseError {
        ParseError {
            position: self.pos(),
            message: msg.to_string(),
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(
                Tok::Int(_)
                    | Tok::ImagUnit
                    | Tok::Gamma { .. }
                    | Tok::G5
                    | Tok::Named(_)
                    | Tok::LPar
                    | Tok::Adj
            )
        )
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.product()?];
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    terms.push(self.product()?);
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    terms.push(negate(self.product()?));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.at += 1;
                factors.push(self.factor()?);
            } else if self.starts_factor() {
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            let mut flat = vec![];
            for f in factors {
                match f {
                    Expr::Product(inner) => flat.extend(inner),
                    other => flat.push(other),
                }
            }
            Expr::Product(flat)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            // unary minus binds tightest (before powers): fold into an
            // integer literal, otherwise scale the primary itself
            let prim = if let Some(Tok::Int(v)) = self.peek() {
                let v = *v;
                self.at += 1;
                Expr::Scalar(GaussScalar::from_int(-v))
            } else {
                negate(self.primary()?)
            };
            return self.postfix(prim);
        }
        let prim = self.primary()?;
        self.postfix(prim)
    }

    fn postfix(&mut self, mut e: Expr) -> Result<Expr, ParseError> {
        loop {
            match self.peek() {
                Some(Tok::Prime) => {
                    self.at += 1;
                    e = Expr::Reversion(Box::new(e));
                }
                Some(Tok::Dagger) => {
                    self.at += 1;
                    e = Expr::Dagger(Box::new(e));
                }
                Some(Tok::Caret) => {
                    self.at += 1;
                    let neg = if self.peek() == Some(&Tok::Minus) {
                        self.at += 1;
                        true
                    } else {
                        false
                    };
                    match self.bump() {
                        Some(Tok::Int(v)) => {
                            e = Expr::Power(Box::new(e), if neg { -v } else { v });
                        }
                        _ => return Err(self.error("expected an integer exponent")),
                    }
                }
                _ => return Ok(e),
            }
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.bump() {
            Some(Tok::Int(v)) => Ok(Expr::Scalar(GaussScalar::from_int(v))),
            Some(Tok::ImagUnit) => Ok(Expr::Scalar(GaussScalar::i())),
            Some(Tok::Gamma { index, hatted }) => Ok(Expr::Gamma { index, hatted }),
            Some(Tok::G5) => Ok(Expr::G5),
            Some(Tok::Named(n)) => Ok(Expr::Named(n)),
            Some(Tok::LPar) => {
                let e = self.sum()?;
                self.expect(&Tok::RPar, "')'")?;
                Ok(e)
            }
            Some(Tok::Adj) => {
                self.expect(&Tok::LPar, "'(' after adj")?;
                let e = self.sum()?;
                self.expect(&Tok::RPar, "')'")?;
                Ok(Expr::Dagger(Box::new(e)))
            }
            _ => {
                self.at -= 1;
                Err(self.error("expected an expression"))
            }
        }
    }
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Scalar(s) => Expr::Scalar(-s),
        Expr::Product(mut inner) => {
            let mut flat = vec![Expr::Scalar(-GaussScalar::one())];
            flat.append(&mut inner);
            Expr::Product(flat)
        }
        other => Expr::Product(vec![Expr::Scalar(-GaussScalar::one()), other]),
    }
}

fn hat_scan(e: &Expr, hatted: &mut bool, unhatted: &mut bool) {
    match e {
        Expr::Gamma { hatted: h, .. } => {
            if *h {
                *hatted = true;
            } else {
                *unhatted = true;
            }
        }
        Expr::Product(v) | Expr::Sum(v) => {
            for x in v {
                hat_scan(x, hatted, unhatted);
            }
        }
        Expr::Power(b, _) | Expr::Dagger(b) | Expr::Reversion(b) => hat_scan(b, hatted, unhatted),
        _ => {}
    }
}

pub fn parse_expr(input: &str) -> Result<Expr, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: input.len(),
    };
    let e = p.sum()?;
    if p.at != p.toks.len() {
        return Err(p.error("unexpected trailing input"));
    }
    let (mut h, mut u) = (false, false);
    hat_scan(&e, &mut h, &mut u);
    if h && u {
        return Err(ParseError {
            position: 0,
            message: "hatted and unhatted generators cannot be mixed".to_string(),
        });
    }
    Ok(e)
}

fn atomic(e: &Expr) -> bool {
    matches!(
        e,
        Expr::Gamma { .. } | Expr::G5 | Expr::Named(_) | Expr::Scalar(_)
    )
}

/// Compact scalar rendering: integers print bare, i prints as `i`, and the
/// general Gaussian rational falls back to `re+im i`. For the literals the
/// grammar can produce (integers and i) the output lexes back to the same
/// token, which keeps parse/print round trips exact.
pub fn scalar_literal(s: &GaussScalar) -> String {
    s.compact()
}

fn print_atom(e: &Expr, out: &mut String) {
    if atomic(e) {
        print_into(e, out);
    } else {
        out.push('(');
        print_into(e, out);
        out.push(')');
    }
}

fn print_into(e: &Expr, out: &mut String) {
    match e {
        Expr::Gamma { index, hatted } => {
            out.push_str(if *hatted { "gh" } else { "g" });
            out.push_str(&index.to_string());
        }
        Expr::G5 => out.push_str("G5"),
        Expr::Named(n) => out.push_str(n.symbol()),
        Expr::Scalar(s) => out.push_str(&scalar_literal(s)),
        Expr::Product(v) => {
            for (k, x) in v.iter().enumerate() {
                if k > 0 {
                    out.push_str(" * ");
                }
                print_atom(x, out);
            }
        }
        Expr::Sum(v) => {
            for (k, x) in v.iter().enumerate() {
                if k > 0 {
                    out.push_str(" + ");
                }
                if matches!(x, Expr::Sum(_)) {
                    print_atom(x, out);
                } else {
                    print_into(x, out);
                }
            }
        }
        Expr::Power(b, n) => {
            print_atom(b, out);
            out.push('^');
            out.push_str(&n.to_string());
        }
        Expr::Dagger(b) => {
            out.push_str("adj(");
            print_into(b, out);
            out.push(')');
        }
        Expr::Reversion(b) => {
            print_atom(b, out);
            out.push('\'');
        }
    }
}

pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    print_into(e, &mut s);
    s
}

fn tau_sign(grade: u32) -> i64 {
    if (grade * grade.saturating_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Reversion of an algebra element given as a matrix: expand over the 2^d
/// monomial basis (trace-orthogonal) and flip each grade-p coefficient by
/// (-1)^{p(p-1)/2}.
pub fn matrix_reversion(rep: &GammaRep, x: &ExactMatrix) -> Result<ExactMatrix, String> {
    let n = rep.dim();
    let inv_n = GaussScalar::from_ratio(1, n as i64);
    let mut out = ExactMatrix::zero(n);
    let mut recon = ExactMatrix::zero(n);
    for mask in 0..(1u32 << rep.d()) {
        let mono = rep.monomial(mask);
        let mono_inv = mono.inverse().expect("monomials are invertible");
        let coeff = (&mono_inv * x).trace() * inv_n.clone();
        if coeff.is_zero() {
            continue;
        }
        recon = &recon + &mono.scale(&coeff);
        let signed = coeff * GaussScalar::from_int(tau_sign(mask.count_ones()));
        out = &out + &mono.scale(&signed);
    }
    if &recon != x {
        return Err("value is outside the monomial span; reversion undefined".to_string());
    }
    Ok(out)
}

pub struct EvalContext<'a> {
    pub rep: &'a GammaRep,
}

impl EvalContext<'_> {
    fn gamma(&self, index: usize, hatted: bool) -> Result<ExactMatrix, String> {
        let want_hat = self.rep.signature.convention == IndexConvention::SpaceFirst;
        if hatted != want_hat {
            return Err(format!(
                "{} generators are not valid in a {} session",
                if hatted { "hatted" } else { "unhatted" },
                self.rep.signature
            ));
        }
        let pos = self
            .rep
            .signature
            .position_of_label(index)
            .ok_or_else(|| format!("index {index} is not valid for {}", self.rep.signature))?;
        Ok(self.rep.matrices[pos].clone())
    }

    fn named(&self, op: NamedOp) -> Result<ExactMatrix, String> {
        match op {
            NamedOp::P1 | NamedOp::P3 | NamedOp::T | NamedOp::PT => {
                let label = match op {
                    NamedOp::P1 => "P(1)",
                    NamedOp::P3 => "P(3)",
                    NamedOp::T => "T",
                    _ => "PT",
                };
                let named = named_elements(self.rep).map_err(|e| e.to_string())?;
                Ok(named
                    .iter()
                    .find(|n| n.label == label)
                    .ok_or_else(|| format!("{label} is undefined here"))?
                    .pair
                    .plus
                    .matrix
                    .clone())
            }
            NamedOp::C => charge_conj(self.rep, canonical_c_sign(self.rep))
                .matrix
                .ok_or_else(|| "no charge conjugation matrix exists".to_string()),
            NamedOp::AT => antiunitary_t(self.rep)
                .map(|a| a.matrix)
                .map_err(|e| e.to_string()),
            NamedOp::HPlus => hermitian_similarity(self.rep, SimilaritySign::Plus)
                .matrix
                .ok_or_else(|| "H+ does not exist for this signature".to_string()),
            NamedOp::HMinus => hermitian_similarity(self.rep, SimilaritySign::Minus)
                .matrix
                .ok_or_else(|| "H- does not exist for this signature".to_string()),
        }
    }

    pub fn eval(&self, e: &Expr) -> Result<ExactMatrix, String> {
        let n = self.rep.dim();
        match e {
            Expr::Gamma { index, hatted } => self.gamma(*index, *hatted),
            Expr::G5 => Ok(self
                .rep
                .chirality()
                .map_err(|e| e.to_string())?
                .operator),
            Expr::Named(op) => self.named(*op),
            Expr::Scalar(s) => Ok(ExactMatrix::identity(n).scale(s)),
            Expr::Product(v) => {
                let mut acc = ExactMatrix::identity(n);
                for x in v {
                    acc = &acc * &self.eval(x)?;
                }
                Ok(acc)
            }
            Expr::Sum(v) => {
                let mut acc = ExactMatrix::zero(n);
                for x in v {
                    acc = &acc + &self.eval(x)?;
                }
                Ok(acc)
            }
            Expr::Power(b, k) => {
                let base = self.eval(b)?;
                let base = if *k < 0 {
                    base.inverse().map_err(|_| "power of a singular matrix".to_string())?
                } else {
                    base
                };
                let mut acc = ExactMatrix::identity(n);
                for _ in 0..k.unsigned_abs() {
                    acc = &acc * &base;
                }
                Ok(acc)
            }
            Expr::Dagger(b) => Ok(self.eval(b)?.dagger()),
            Expr::Reversion(b) => matrix_reversion(self.rep, &self.eval(b)?),
        }
    }

    /// Symbolic form when the value is a scalar multiple of a monomial,
    /// e.g. "(-1) * g0 g1" or "(i) * 1".
    pub fn monomial_annotation(&self, x: &ExactMatrix) -> Option<String> {
        for mask in 0..(1u32 << self.rep.d()) {
            let mono = self.rep.monomial(mask);
            if let Some(s) = x.as_scalar_multiple_of(&mono) {
                let mut name = String::new();
                if mask == 0 {
                    name.push('1');
                } else {
                    let hat = self.rep.signature.convention == IndexConvention::SpaceFirst;
                    let mut first = true;
                    for posn in 0..self.rep.d() {
                        if mask & (1 << posn) != 0 {
                            if !first {
                                name.push(' ');
                            }
                            first = false;
                            name.push_str(if hat { "gh" } else { "g" });
                            name.push_str(&self.rep.signature.label(posn).to_string());
                        }
                    }
                }
                return Some(format!("({}) * {name}", scalar_literal(&s)));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pinor_core::clifford::GammaRep;

    #[test]
    fn parse_print_parse_is_identity() {
        let samples = [
            "g0 g1 g2",
            "i*G5",
            "(g0 g1 g2)'",
            "P3^2",
            "G5 P3 + P3 G5",
            "2 g0 - 3 g1 + adj(g2)",
            "-g0^2",
            "(g0 + g1)^-1",
            "C AT'",
            "gh1 gh2^3",
            "H+ g0 H-",
        ];
        for s in samples {
            let ast = parse_expr(s).unwrap_or_else(|e| panic!("{s}: {e}"));
            let printed = print_expr(&ast);
            let re = parse_expr(&printed).unwrap_or_else(|e| panic!("{printed}: {e}"));
            assert_eq!(ast, re, "{s} -> {printed}");
        }
    }

    #[test]
    fn rejects_mixed_hats_and_garbage() {
        assert!(parse_expr("g0 gh1").is_err());
        assert!(parse_expr("g0 +").is_err());
        assert!(parse_expr("q").is_err());
        let e = parse_expr("g0 ) g1").unwrap_err();
        assert_eq!(e.position, 3);
    }

    #[test]
    fn reversion_reverses_products() {
        let rep = GammaRep::dirac13();
        let ctx = EvalContext { rep: &rep };
        let lhs = ctx.eval(&parse_expr("(g0 g1 g2)'").unwrap()).unwrap();
        let rhs = ctx.eval(&parse_expr("g2 g1 g0").unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn named_squares_and_anticommutation() {
        let rep = GammaRep::dirac13();
        let ctx = EvalContext { rep: &rep };
        let p3sq = ctx.eval(&parse_expr("P3^2").unwrap()).unwrap();
        assert_eq!(ctx.monomial_annotation(&p3sq).unwrap(), "(1) * 1");
        let z = ctx.eval(&parse_expr("G5 P3 + P3 G5").unwrap()).unwrap();
        assert!(z.is_zero());
        let hat = GammaRep::hat_from13(GammaRep::dirac13());
        let ctx = EvalContext { rep: &hat };
        let p3sq = ctx.eval(&parse_expr("P3^2").unwrap()).unwrap();
        assert_eq!(ctx.monomial_annotation(&p3sq).unwrap(), "(-1) * 1");
    }
}
