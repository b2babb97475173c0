//! Free commutative Rota-Baxter algebra on a finite alphabet.
//!
//! Elements are stored as tensors `a0 ⊗ a1 ⊗ … ⊗ ak` with every `ai` a
//! monomial of `k[X]` or the unit. The tensor stands for the standard word
//! `a0·R(a1·R(a2 ⋯ R(ak)))`. Heads multiply in `k[X]`; tails are combined by
//! the shuffle (weight 0) or the quasi-shuffle that merges letters (weight λ).
//! `R(a0 ⊗ a) = 1 ⊗ a0 ⊗ a`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::expr::{RbAlgebra, RbExpr};
use crate::scalar::{BasisSymbol, LinComb, Monomial, Rational};
use crate::shuffle::quasi_shuffle_words;

/// A monomial of `k[X]` or the unit (`None`).
pub type Letter = Option<Monomial>;

fn mul_letters(a: &Letter, b: &Letter) -> Letter {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(x.mul(y)),
    }
}

fn letter_degree(a: &Letter) -> usize {
    a.as_ref().map_or(0, Monomial::degree)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(BasisSymbol),
    #[error("invalid nested word: {0}")]
    Invalid(&'static str),
}

/// Standard-base word `head · R(tail[0] · R(tail[1] ⋯ R(tail[k-1])))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NestedWord {
    head: Letter,
    tail: Vec<Letter>,
}

impl NestedWord {
    /// Rejects the bare unit and tails ending in the unit.
    pub fn new(head: Letter, tail: Vec<Letter>) -> Result<Self, FreeError> {
        if head.is_none() && tail.is_empty() {
            return Err(FreeError::Invalid("the unit is not a word"));
        }
        if matches!(tail.last(), Some(None)) {
            return Err(FreeError::Invalid("innermost R applied to a scalar"));
        }
        Ok(NestedWord { head, tail })
    }

    pub fn monomial(m: Monomial) -> Self {
        NestedWord { head: Some(m), tail: Vec::new() }
    }

    pub fn generator(s: BasisSymbol) -> Self {
        Self::monomial(Monomial::single(s))
    }

    pub fn head(&self) -> &Letter {
        &self.head
    }

    pub fn tail(&self) -> &[Letter] {
        &self.tail
    }

    pub fn r_degree(&self) -> usize {
        self.tail.len()
    }

    /// `n` for a bare monomial of `n` letters, `1` for `R(p)`, `n + 1` for `R(p)·w`.
    pub fn degree(&self) -> usize {
        let n = letter_degree(&self.head);
        if self.tail.is_empty() {
            n
        } else {
            n + 1
        }
    }

    /// Total number of generator occurrences.
    pub fn letter_count(&self) -> usize {
        letter_degree(&self.head) + self.tail.iter().map(letter_degree).sum::<usize>()
    }

    /// The same word as an expression tree.
    pub fn to_expr(&self) -> RbExpr {
        fn chain(letters: &[Letter]) -> RbExpr {
            let (first, rest) = letters.split_first().expect("nonempty");
            let mut parts: Vec<RbExpr> = first
                .iter()
                .flat_map(|m| m.factors().iter().cloned().map(RbExpr::symbol))
                .collect();
            if !rest.is_empty() {
                parts.push(RbExpr::rb(chain(rest)));
            }
            RbExpr::product(parts)
        }
        let mut all = vec![self.head.clone()];
        all.extend(self.tail.iter().cloned());
        chain(&all)
    }
}

impl Ord for NestedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.r_degree()
            .cmp(&other.r_degree())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.head.cmp(&other.head))
            .then_with(|| self.tail.cmp(&other.tail))
    }
}

impl PartialOrd for NestedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NestedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn chain(f: &mut fmt::Formatter<'_>, first: &Letter, rest: &[Letter]) -> fmt::Result {
            if let Some(m) = first {
                write!(f, "{m}")?;
                if !rest.is_empty() {
                    f.write_str(".")?;
                }
            }
            if let Some((next, more)) = rest.split_first() {
                f.write_str("R(")?;
                chain(f, next, more)?;
                f.write_str(")")?;
            }
            Ok(())
        }
        chain(f, &self.head, &self.tail)
    }
}

/// Product of two standard words at weight `lambda`.
pub fn free_product(u: &NestedWord, v: &NestedWord, lambda: &Rational) -> LinComb<NestedWord> {
    let head = mul_letters(&u.head, &v.head);
    let merge = |a: &Letter, b: &Letter| LinComb::basis(mul_letters(a, b));
    quasi_shuffle_words(&u.tail, &v.tail, lambda, &merge)
        .into_terms()
        .map(|(tail, c)| (NestedWord { head: head.clone(), tail }, c))
        .collect()
}

/// `R(a0 ⊗ a) = 1 ⊗ a0 ⊗ a`.
pub fn rb_operator(u: &NestedWord) -> NestedWord {
    let mut tail = Vec::with_capacity(u.tail.len() + 1);
    tail.push(u.head.clone());
    tail.extend(u.tail.iter().cloned());
    NestedWord { head: None, tail }
}

/// The free commutative RB algebra of a given weight on a declared alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeRb {
    alphabet: Vec<BasisSymbol>,
    weight: Rational,
}

impl FreeRb {
    pub fn new(alphabet: Vec<BasisSymbol>, weight: Rational) -> Self {
        FreeRb { alphabet, weight }
    }

    pub fn alphabet(&self) -> &[BasisSymbol] {
        &self.alphabet
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn mul(&self, x: &LinComb<NestedWord>, y: &LinComb<NestedWord>) -> LinComb<NestedWord> {
        let mut out = LinComb::zero();
        for (u, c) in x.iter() {
            for (v, d) in y.iter() {
                out.add_scaled(&free_product(u, v, &self.weight), &(c * d));
            }
        }
        out
    }

    pub fn r(&self, x: &LinComb<NestedWord>) -> LinComb<NestedWord> {
        x.map_keys(rb_operator)
    }

    pub fn eval_free(&self, e: &RbExpr) -> Result<LinComb<NestedWord>, FreeError> {
        self.evaluate(e)
    }
}

impl RbAlgebra for FreeRb {
    type Word = NestedWord;
    type Error = FreeError;

    fn generator(&self, s: &BasisSymbol) -> Result<LinComb<NestedWord>, FreeError> {
        if self.alphabet.contains(s) {
            Ok(LinComb::basis(NestedWord::generator(s.clone())))
        } else {
            Err(FreeError::UnknownSymbol(s.clone()))
        }
    }

    fn product(&self, x: &LinComb<NestedWord>, y: &LinComb<NestedWord>) -> Result<LinComb<NestedWord>, FreeError> {
        Ok(self.mul(x, y))
    }

    fn rb(&self, x: &LinComb<NestedWord>) -> Result<LinComb<NestedWord>, FreeError> {
        Ok(self.r(x))
    }
}
