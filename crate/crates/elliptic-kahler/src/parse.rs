//! Text formats: one line-oriented grammar serves Sullivan algebras, ideals
//! and ring presentations.
//!
//! ```text
//! # comment
//! gen <name> <degree> [bidegree <i> <j>]
//! d <name> = <expression>
//! rel <expression>
//! ```
//!
//! Expressions are rational-coefficient polynomials in previously declared
//! generators, written with `+`, `-`, `*`, `^` and rational literals like
//! `3/2`. A file with `rel` lines is an ideal (or presentation) over the
//! even generators; a file with `d` lines is a differential algebra;
//! undeclared differentials default to zero.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::{Polynomial, Rational, RingRef};
use crate::sullivan::{AlgElement, RingPresentation, SullivanAlgebra, SullivanGenerator};
use crate::{Error, PolyRing, Result};

/// A parse failure with position data and a caret snippet.
#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub source_line: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )?;
        writeln!(f, "  {}", self.source_line)?;
        write!(f, "  {}^", " ".repeat(self.col.saturating_sub(1)))
    }
}

impl std::error::Error for ParseError {}

fn err_at(line: usize, col: usize, source_line: &str, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
        source_line: source_line.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Eq,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn tokenize(line_no: usize, line: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let single = |tok| Spanned { tok, col };
        match c {
            ' ' | '\t' | '\r' => i += 1,
            '#' => break,
            '+' => {
                out.push(single(Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push(single(Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push(single(Tok::Star));
                i += 1;
            }
            '^' => {
                out.push(single(Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push(single(Tok::Slash));
                i += 1;
            }
            '=' => {
                out.push(single(Tok::Eq));
                i += 1;
            }
            '(' => {
                out.push(single(Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push(single(Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = BigInt::from_str(&text)
                    .map_err(|_| err_at(line_no, col, line, "bad integer literal"))?;
                out.push(Spanned { tok: Tok::Num(n), col });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    col,
                });
            }
            other => {
                return Err(err_at(
                    line_no,
                    col,
                    line,
                    format!("unexpected character `{other}`"),
                ))
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Ast {
    Num(Rational),
    Sym { name: String, col: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct ExprParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line_no: usize,
    line: &'a str,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let col = self
            .peek()
            .map(|t| t.col)
            .unwrap_or_else(|| self.line.chars().count() + 1);
        err_at(self.line_no, col, self.line, message)
    }

    fn expr(&mut self) -> std::result::Result<Ast, ParseError> {
        let mut negated = false;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Minus)) {
            self.bump();
            negated = true;
        }
        let mut acc = self.term()?;
        if negated {
            acc = Ast::Neg(Box::new(acc));
        }
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Ast::Add(Box::new(acc), Box::new(rhs));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Ast::Sub(Box::new(acc), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> std::result::Result<Ast, ParseError> {
        let mut acc = self.factor()?;
        while matches!(self.peek().map(|t| &t.tok), Some(Tok::Star)) {
            self.bump();
            let rhs = self.factor()?;
            acc = Ast::Mul(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> std::result::Result<Ast, ParseError> {
        let base = self.atom()?;
        if matches!(self.peek().map(|t| &t.tok), Some(Tok::Caret)) {
            self.bump();
            match self.bump() {
                Some(Spanned { tok: Tok::Num(n), col }) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err_at(self.line_no, col, self.line, "exponent out of range"))?;
                    return Ok(Ast::Pow(Box::new(base), e));
                }
                _ => return Err(self.error_here("expected an integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> std::result::Result<Ast, ParseError> {
        match self.bump() {
            Some(Spanned { tok: Tok::Num(n), .. }) => {
                if matches!(self.peek().map(|t| &t.tok), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Spanned { tok: Tok::Num(d), col }) => {
                            if d == BigInt::from(0) {
                                return Err(err_at(self.line_no, col, self.line, "division by zero"));
                            }
                            Ok(Ast::Num(Rational::new(n, d)))
                        }
                        _ => Err(self.error_here("expected a denominator after `/`")),
                    }
                } else {
                    Ok(Ast::Num(Rational::from_integer(n)))
                }
            }
            Some(Spanned { tok: Tok::Ident(name), col }) => Ok(Ast::Sym { name, col }),
            Some(Spanned { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Spanned { tok: Tok::RParen, .. }) => Ok(inner),
                    _ => Err(self.error_here("expected `)`")),
                }
            }
            _ => Err(self.error_here("expected a number, a name or `(`")),
        }
    }
}

fn parse_expression(
    line_no: usize,
    line: &str,
    toks: &[Spanned],
) -> std::result::Result<Ast, ParseError> {
    let mut p = ExprParser {
        toks,
        pos: 0,
        line_no,
        line,
    };
    let ast = p.expr()?;
    if p.pos != toks.len() {
        return Err(p.error_here("unexpected trailing input"));
    }
    Ok(ast)
}

fn eval_poly(
    ast: &Ast,
    ring: &RingRef,
    line_no: usize,
    line: &str,
) -> std::result::Result<Polynomial, ParseError> {
    match ast {
        Ast::Num(c) => Ok(Polynomial::constant(ring, c.clone())),
        Ast::Sym { name, col } => match ring.var_index(name) {
            Some(i) => Ok(Polynomial::variable(ring, i)),
            None => Err(err_at(line_no, *col, line, format!("unknown variable `{name}`"))),
        },
        Ast::Neg(a) => Ok(-&eval_poly(a, ring, line_no, line)?),
        Ast::Add(a, b) => {
            Ok(&eval_poly(a, ring, line_no, line)? + &eval_poly(b, ring, line_no, line)?)
        }
        Ast::Sub(a, b) => {
            Ok(&eval_poly(a, ring, line_no, line)? - &eval_poly(b, ring, line_no, line)?)
        }
        Ast::Mul(a, b) => {
            Ok(&eval_poly(a, ring, line_no, line)? * &eval_poly(b, ring, line_no, line)?)
        }
        Ast::Pow(a, e) => Ok(eval_poly(a, ring, line_no, line)?.pow(*e)),
    }
}

fn eval_element(
    ast: &Ast,
    alg: &SullivanAlgebra,
    line_no: usize,
    line: &str,
) -> std::result::Result<AlgElement, ParseError> {
    let one = || {
        AlgElement::from_terms(vec![(
            vec![0; alg.generators().len()],
            Rational::one(),
        )])
    };
    match ast {
        Ast::Num(c) => Ok(one().scale(c)),
        Ast::Sym { name, col } => match alg.generator_index(name) {
            Some(i) => Ok(alg.generator_element(i)),
            None => Err(err_at(line_no, *col, line, format!("unknown generator `{name}`"))),
        },
        Ast::Neg(a) => Ok(eval_element(a, alg, line_no, line)?.scale(&-Rational::one())),
        Ast::Add(a, b) => {
            Ok(eval_element(a, alg, line_no, line)?.add(&eval_element(b, alg, line_no, line)?))
        }
        Ast::Sub(a, b) => Ok(eval_element(a, alg, line_no, line)?
            .add(&eval_element(b, alg, line_no, line)?.scale(&-Rational::one()))),
        Ast::Mul(a, b) => Ok(alg.mul_elements(
            &eval_element(a, alg, line_no, line)?,
            &eval_element(b, alg, line_no, line)?,
        )),
        Ast::Pow(a, e) => {
            let base = eval_element(a, alg, line_no, line)?;
            let mut acc = one();
            for _ in 0..*e {
                acc = alg.mul_elements(&acc, &base);
            }
            Ok(acc)
        }
    }
}

/// Parse a polynomial expression in the variables of `ring`.
pub fn parse_polynomial(text: &str, ring: &RingRef) -> std::result::Result<Polynomial, ParseError> {
    let toks = tokenize(1, text)?;
    if toks.is_empty() {
        return Err(err_at(1, 1, text, "empty expression"));
    }
    let ast = parse_expression(1, text, &toks)?;
    eval_poly(&ast, ring, 1, text)
}

/// A parsed source file: always a Sullivan algebra, plus any `rel` lines
/// collected over the polynomial ring on the even generators.
#[derive(Debug, Clone)]
pub struct SourceDocument {
    pub algebra: SullivanAlgebra,
    pub relations: Vec<Polynomial>,
    pub even_ring: Option<RingRef>,
}

impl SourceDocument {
    /// The ideal the document denotes: explicit `rel` lines when present,
    /// otherwise the projected odd differentials of the algebra.
    pub fn ideal(&self) -> Result<Vec<Polynomial>> {
        if !self.relations.is_empty() {
            return Ok(self.relations.clone());
        }
        let ring = self
            .even_ring
            .clone()
            .ok_or_else(|| Error::Precondition("document has no even generators".into()))?;
        let pure = self.algebra.associated_pure();
        let evens: Vec<usize> = (0..pure.generators().len())
            .filter(|&i| !pure.generators()[i].is_odd())
            .collect();
        let mut relations = Vec::new();
        for (i, g) in pure.generators().iter().enumerate() {
            if g.is_odd() && !pure.differential(i).is_zero() {
                relations.push(pure.element_to_polynomial(pure.differential(i), &ring, &evens)?);
            }
        }
        if relations.is_empty() {
            return Err(Error::Precondition(
                "document carries no relations and no differentials".into(),
            ));
        }
        Ok(relations)
    }

    /// The quotient presentation over the even generators.
    pub fn presentation(&self) -> Result<RingPresentation> {
        let ring = self
            .even_ring
            .clone()
            .ok_or_else(|| Error::Precondition("document has no even generators".into()))?;
        let relations = self.ideal()?;
        let distinguished = ring
            .variables()
            .iter()
            .find(|v| v.weight == 2)
            .map(|v| v.name.clone());
        RingPresentation::new(ring, relations, distinguished)
    }
}

/// Parse the full document grammar; the algebra is validated on load.
pub fn parse_document(text: &str) -> Result<SourceDocument> {
    let mut gens: Vec<SullivanGenerator> = Vec::new();
    let mut d_lines: Vec<(String, Ast, usize, String)> = Vec::new();
    let mut rel_lines: Vec<(Ast, usize, String)> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let toks = tokenize(line_no, raw_line)?;
        if toks.is_empty() {
            continue;
        }
        let head = match &toks[0].tok {
            Tok::Ident(h) => h.clone(),
            _ => {
                return Err(
                    err_at(line_no, toks[0].col, raw_line, "expected `gen`, `d` or `rel`").into(),
                )
            }
        };
        match head.as_str() {
            "gen" => {
                let name = match toks.get(1) {
                    Some(Spanned { tok: Tok::Ident(n), .. }) => n.clone(),
                    _ => {
                        return Err(err_at(
                            line_no,
                            toks[0].col + 4,
                            raw_line,
                            "expected a generator name",
                        )
                        .into())
                    }
                };
                let degree = match toks.get(2) {
                    Some(Spanned { tok: Tok::Num(n), col }) => u32::try_from(n.clone())
                        .map_err(|_| err_at(line_no, *col, raw_line, "degree out of range"))?,
                    _ => {
                        return Err(err_at(
                            line_no,
                            raw_line.chars().count() + 1,
                            raw_line,
                            "expected a degree",
                        )
                        .into())
                    }
                };
                let mut gen = SullivanGenerator::new(name, degree).map_err(|e| {
                    Error::Parse(err_at(line_no, toks[1].col, raw_line, e.to_string()))
                })?;
                match toks.get(3) {
                    None => {}
                    Some(Spanned { tok: Tok::Ident(kw), col }) if kw == "bidegree" => {
                        let (i, j) = match (toks.get(4), toks.get(5)) {
                            (
                                Some(Spanned { tok: Tok::Num(i), .. }),
                                Some(Spanned { tok: Tok::Num(j), .. }),
                            ) => (
                                u32::try_from(i.clone()).map_err(|_| {
                                    err_at(line_no, *col, raw_line, "bidegree out of range")
                                })?,
                                u32::try_from(j.clone()).map_err(|_| {
                                    err_at(line_no, *col, raw_line, "bidegree out of range")
                                })?,
                            ),
                            _ => {
                                return Err(err_at(
                                    line_no,
                                    *col,
                                    raw_line,
                                    "bidegree needs two integers",
                                )
                                .into())
                            }
                        };
                        if let Some(extra) = toks.get(6) {
                            return Err(err_at(
                                line_no,
                                extra.col,
                                raw_line,
                                "unexpected trailing input",
                            )
                            .into());
                        }
                        gen = gen
                            .with_bidegree(i, j)
                            .map_err(|e| Error::Parse(err_at(line_no, *col, raw_line, e.to_string())))?;
                    }
                    Some(t) => {
                        return Err(
                            err_at(line_no, t.col, raw_line, "unexpected trailing input").into()
                        )
                    }
                }
                if gens.iter().any(|g| g.name == gen.name) {
                    return Err(err_at(
                        line_no,
                        toks[1].col,
                        raw_line,
                        format!("duplicate generator `{}`", gen.name),
                    )
                    .into());
                }
                gens.push(gen);
            }
            "d" => {
                let (name, name_col) = match toks.get(1) {
                    Some(Spanned { tok: Tok::Ident(n), col }) => (n.clone(), *col),
                    _ => {
                        return Err(err_at(
                            line_no,
                            toks[0].col + 2,
                            raw_line,
                            "expected a generator name",
                        )
                        .into())
                    }
                };
                if !matches!(toks.get(2).map(|t| &t.tok), Some(Tok::Eq)) {
                    return Err(err_at(line_no, name_col, raw_line, "expected `=`").into());
                }
                let rhs = &toks[3..];
                if rhs.is_empty() {
                    return Err(err_at(
                        line_no,
                        raw_line.chars().count() + 1,
                        raw_line,
                        "expected an expression",
                    )
                    .into());
                }
                let ast = parse_expression(line_no, raw_line, rhs)?;
                d_lines.push((name, ast, line_no, raw_line.to_string()));
            }
            "rel" => {
                let rhs = &toks[1..];
                if rhs.is_empty() {
                    return Err(err_at(
                        line_no,
                        raw_line.chars().count() + 1,
                        raw_line,
                        "expected an expression",
                    )
                    .into());
                }
                let ast = parse_expression(line_no, raw_line, rhs)?;
                rel_lines.push((ast, line_no, raw_line.to_string()));
            }
            other => {
                return Err(err_at(
                    line_no,
                    toks[0].col,
                    raw_line,
                    format!("unknown directive `{other}` (expected `gen`, `d` or `rel`)"),
                )
                .into())
            }
        }
    }

    let mut alg = SullivanAlgebra::new(gens)?;

    for (name, ast, line_no, line) in &d_lines {
        let Some(target) = alg.generator_index(name) else {
            return Err(err_at(*line_no, 1, line, format!("unknown generator `{name}`")).into());
        };
        let el = eval_element(ast, &alg, *line_no, line)?;
        let expected = alg.generators()[target].degree + 1;
        for (exps, _) in el.terms() {
            let found = alg.monomial_degree(exps);
            if found != expected {
                return Err(err_at(
                    *line_no,
                    1,
                    line,
                    format!("d({name}) has a term of degree {found}, expected {expected}"),
                )
                .into());
            }
            if let Some((bad, _)) = exps.iter().enumerate().find(|(j, e)| **e > 0 && *j >= target) {
                return Err(err_at(
                    *line_no,
                    1,
                    line,
                    format!(
                        "d({name}) uses `{}`, which is not declared before `{name}`",
                        alg.generators()[bad].name
                    ),
                )
                .into());
            }
        }
        alg.set_differential(name, el)?;
    }

    // remaining Sullivan conditions (minimality, d^2 = 0)
    let report = alg.validate();
    if !report.is_valid() {
        return Err(Error::InvalidAlgebra(report));
    }

    let even_indices: Vec<usize> = (0..alg.generators().len())
        .filter(|&i| !alg.generators()[i].is_odd())
        .collect();
    let even_ring = if even_indices.is_empty() {
        None
    } else {
        let vars: Vec<(&str, u32)> = even_indices
            .iter()
            .map(|&i| (alg.generators()[i].name.as_str(), alg.generators()[i].degree))
            .collect();
        Some(PolyRing::new(&vars)?)
    };

    let mut relations = Vec::new();
    for (ast, line_no, line) in &rel_lines {
        let ring = even_ring.as_ref().ok_or_else(|| {
            Error::Parse(err_at(*line_no, 1, line, "rel lines need even generators"))
        })?;
        let p = eval_poly(ast, ring, *line_no, line)?;
        if !p.is_homogeneous() {
            return Err(err_at(*line_no, 1, line, "relations must be homogeneous").into());
        }
        relations.push(p);
    }

    Ok(SourceDocument {
        algebra: alg,
        relations,
        even_ring,
    })
}

/// Parse a `.cdga` file into a validated Sullivan algebra.
pub fn parse_cdga(text: &str) -> Result<SullivanAlgebra> {
    Ok(parse_document(text)?.algebra)
}
