//! Expressions in the Rota-Baxter signature `{+, scalar, *, R}`.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := [rational ['*']] factor (('*'|'.') factor)*
//! factor := symbol | 'R' '(' expr ')' | '(' expr ')'
//! ```
//!
//! `.` is accepted as a product so that printed normal forms (`R(a).b`) can be
//! fed back in. [`RbExpr`]'s `Display` is the canonical form; parsing it gives
//! back the same tree.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{BasisSymbol, LinComb, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbExpr {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Rational,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Symbol(BasisSymbol),
    R(RbExpr),
    Group(RbExpr),
}

impl RbExpr {
    pub fn symbol(s: BasisSymbol) -> Self {
        Self::factor(Factor::Symbol(s))
    }

    pub fn factor(f: Factor) -> Self {
        RbExpr { terms: vec![Term { coeff: Rational::one(), factors: vec![f] }] }
    }

    pub fn rb(inner: RbExpr) -> Self {
        Self::factor(Factor::R(inner))
    }

    /// Product of the given expressions, each wrapped as a factor.
    pub fn product(parts: impl IntoIterator<Item = RbExpr>) -> Self {
        let factors = parts.into_iter().map(RbExpr::into_factor).collect();
        RbExpr { terms: vec![Term { coeff: Rational::one(), factors }] }
    }

    /// Linear combination of expressions.
    pub fn sum(parts: impl IntoIterator<Item = (Rational, RbExpr)>) -> Self {
        let terms = parts
            .into_iter()
            .map(|(c, e)| Term { coeff: c, factors: vec![e.into_factor()] })
            .collect();
        RbExpr { terms }
    }

    /// Unwraps single-factor unit-coefficient expressions, otherwise groups.
    pub fn into_factor(self) -> Factor {
        if self.terms.len() == 1 && self.terms[0].coeff.is_one() && self.terms[0].factors.len() == 1 {
            let mut t = self.terms;
            return t.pop().unwrap().factors.pop().unwrap();
        }
        Factor::Group(self)
    }

    /// Generators occurring anywhere in the expression.
    pub fn symbols(&self) -> Vec<BasisSymbol> {
        let mut out = Vec::new();
        fn walk(e: &RbExpr, out: &mut Vec<BasisSymbol>) {
            for t in &e.terms {
                for f in &t.factors {
                    match f {
                        Factor::Symbol(s) => out.push(s.clone()),
                        Factor::R(e) | Factor::Group(e) => walk(e, out),
                    }
                }
            }
        }
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for RbExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let body = FactorsDisplay(&t.factors);
            if t.coeff.is_zero() {
                // keep explicit zero coefficients so printing stays invertible
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "0 {body}")?;
            } else {
                crate::scalar::write_term(f, i == 0, &t.coeff, &body)?;
            }
        }
        Ok(())
    }
}

struct FactorsDisplay<'a>(&'a [Factor]);

impl fmt::Display for FactorsDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match x {
                Factor::Symbol(s) => write!(f, "{s}")?,
                Factor::R(e) => write!(f, "R({e})")?,
                Factor::Group(e) => write!(f, "({e})")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: expected {expected}, found {found}")]
pub struct ParseError {
    pub position: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Slash,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Dot,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Dot => f.write_str("`.`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        let single = match c {
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '.' => Some(Tok::Dot),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            out.push((pos, Tok::Int(chars[start..i].iter().map(|x| x.1).collect())));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().map(|x| x.1).collect())));
        } else {
            return Err(ParseError {
                position: pos,
                expected: "a symbol, number, operator or parenthesis".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.toks[self.at].0,
            expected: expected.into(),
            found: self.peek().to_string(),
        })
    }

    fn expr(&mut self) -> Result<RbExpr, ParseError> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Tok::Minus => {
                self.bump();
                -Rational::one()
            }
            Tok::Plus => {
                self.bump();
                Rational::one()
            }
            _ => Rational::one(),
        };
        loop {
            let mut t = self.term()?;
            t.coeff *= &sign;
            terms.push(t);
            sign = match self.peek() {
                Tok::Plus => Rational::one(),
                Tok::Minus => -Rational::one(),
                _ => break,
            };
            self.bump();
        }
        Ok(RbExpr { terms })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let coeff = if let Tok::Int(n) = self.peek().clone() {
            self.bump();
            let num: num_bigint::BigInt = n.parse().expect("lexed digits");
            let c = if *self.peek() == Tok::Slash {
                self.bump();
                match self.bump() {
                    Tok::Int(d) => {
                        let den: num_bigint::BigInt = d.parse().expect("lexed digits");
                        if den.is_zero() {
                            self.at -= 1;
                            return self.fail("a nonzero denominator");
                        }
                        Rational::new(num, den)
                    }
                    _ => {
                        self.at -= 1;
                        return self.fail("a denominator");
                    }
                }
            } else {
                Rational::from_integer(num)
            };
            if *self.peek() == Tok::Star {
                self.bump();
            }
            c
        } else {
            Rational::one()
        };
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Tok::Star | Tok::Dot) {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(Term { coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) if name == "R" && *self.peek2() == Tok::LParen => {
                self.bump();
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(Factor::R(inner))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Factor::Symbol(name.parse().expect("lexed identifiers are symbols")))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.close()?;
                Ok(Factor::Group(inner))
            }
            _ => self.fail("expression"),
        }
    }

    fn close(&mut self) -> Result<(), ParseError> {
        if *self.peek() == Tok::RParen {
            self.bump();
            Ok(())
        } else {
            self.fail("`)`")
        }
    }
}

pub fn parse_expr(text: &str) -> Result<RbExpr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail("`+`, `-`, `*` or end of input");
    }
    Ok(e)
}

/// A commutative algebra with a linear operator, whose elements are linear
/// combinations of some normal-form word type.
pub trait RbAlgebra {
    type Word: Ord + Clone;
    type Error;

    fn generator(&self, s: &BasisSymbol) -> Result<LinComb<Self::Word>, Self::Error>;
    fn product(&self, x: &LinComb<Self::Word>, y: &LinComb<Self::Word>) -> Result<LinComb<Self::Word>, Self::Error>;
    fn rb(&self, x: &LinComb<Self::Word>) -> Result<LinComb<Self::Word>, Self::Error>;

    /// Bottom-up homomorphic evaluation.
    fn evaluate(&self, e: &RbExpr) -> Result<LinComb<Self::Word>, Self::Error> {
        let mut out = LinComb::zero();
        for t in &e.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let mut acc: Option<LinComb<Self::Word>> = None;
            for f in &t.factors {
                let v = match f {
                    Factor::Symbol(s) => self.generator(s)?,
                    Factor::R(inner) => self.rb(&self.evaluate(inner)?)?,
                    Factor::Group(inner) => self.evaluate(inner)?,
                };
                acc = Some(match acc {
                    None => v,
                    Some(a) => self.product(&a, &v)?,
                });
            }
            if let Some(a) = acc {
                out.add_scaled(&a, &t.coeff);
            }
        }
        Ok(out)
    }
}
