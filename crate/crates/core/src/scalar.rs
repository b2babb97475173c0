//! Exact scalars, basis symbols, monomials, tensor words and linear combinations.
//!
//! Everything downstream is built on [`LinComb`]: a finite formal sum of basis
//! objects with [`Rational`] coefficients, stored without zero entries and
//! iterated in the key type's total order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("invalid symbol `{0}`")]
    InvalidSymbol(String),
    #[error("empty word")]
    EmptyWord,
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let t = text.trim();
    let bad = || ScalarError::InvalidRational(text.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// A basis element: an identifier with an optional numeric suffix.
///
/// `a`, `e12` and `x_3` are all symbols; the trailing digits (when they carry
/// no leading zero) become the index so that `a2 < a10`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisSymbol {
    name: Arc<str>,
    index: Option<u64>,
}

impl BasisSymbol {
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        name.parse().unwrap_or(BasisSymbol { name: name.into(), index: None })
    }

    pub fn indexed(name: impl Into<String>, index: u64) -> Self {
        BasisSymbol { name: name.into().into(), index: Some(index) }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> Option<u64> {
        self.index
    }

    pub fn is_identifier(text: &str) -> bool {
        let mut chars = text.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }
}

impl FromStr for BasisSymbol {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !Self::is_identifier(s) {
            return Err(ScalarError::InvalidSymbol(s.to_string()));
        }
        let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let digits = &s[split..];
        if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
            return Ok(BasisSymbol { name: s.into(), index: None });
        }
        match digits.parse() {
            Ok(i) => Ok(BasisSymbol { name: s[..split].into(), index: Some(i) }),
            Err(_) => Ok(BasisSymbol { name: s.into(), index: None }),
        }
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.name, i),
            None => f.write_str(&self.name),
        }
    }
}

/// Nonempty commutative monomial, a multiset of basis symbols kept sorted.
///
/// Ordered by degree, then lexicographically on the sorted factors (deglex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<BasisSymbol>);

impl Monomial {
    /// Panics on an empty factor list.
    pub fn new(mut factors: Vec<BasisSymbol>) -> Self {
        assert!(!factors.is_empty(), "monomials are nonempty");
        factors.sort();
        Monomial(factors)
    }

    pub fn try_new(factors: Vec<BasisSymbol>) -> Result<Self, ScalarError> {
        if factors.is_empty() {
            Err(ScalarError::EmptyWord)
        } else {
            Ok(Self::new(factors))
        }
    }

    pub fn single(symbol: BasisSymbol) -> Self {
        Monomial(vec![symbol])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[BasisSymbol] {
        &self.0
    }

    /// The sole factor of a degree-1 monomial.
    pub fn as_letter(&self) -> Option<&BasisSymbol> {
        match self.0.as_slice() {
            [b] => Some(b),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut f = Vec::with_capacity(self.0.len() + other.0.len());
        f.extend_from_slice(&self.0);
        f.extend_from_slice(&other.0);
        Monomial::new(f)
    }

    /// Splits off the smallest factor: `self = rest · letter`, with `rest`
    /// absent for degree-1 monomials.
    pub fn split_first(&self) -> (BasisSymbol, Option<Monomial>) {
        let letter = self.0[0].clone();
        let rest = (self.0.len() > 1).then(|| Monomial(self.0[1..].to_vec()));
        (letter, rest)
    }

    /// All factorizations `self = v1 · v2` into nonempty parts (unordered pairs
    /// are reported in both orders).
    pub fn factorizations(&self) -> Vec<(Monomial, Monomial)> {
        let n = self.0.len();
        let mut out = Vec::new();
        if n < 2 {
            return out;
        }
        for mask in 1..(1u64 << n) - 1 {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            for (i, s) in self.0.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a.push(s.clone());
                } else {
                    b.push(s.clone());
                }
            }
            out.push((Monomial(a), Monomial(b)));
        }
        out.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        out.dedup();
        out
    }

    /// All monomials of the given degree over `basis`, in ascending order.
    pub fn all_of_degree(basis: &[BasisSymbol], degree: usize) -> Vec<Monomial> {
        let mut sorted = basis.to_vec();
        sorted.sort();
        sorted.dedup();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(degree);
        fn rec(
            basis: &[BasisSymbol],
            start: usize,
            left: usize,
            cur: &mut Vec<BasisSymbol>,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                out.push(Monomial(cur.clone()));
                return;
            }
            for i in start..basis.len() {
                cur.push(basis[i].clone());
                rec(basis, i, left - 1, cur, out);
                cur.pop();
            }
        }
        if degree > 0 {
            rec(&sorted, 0, degree, &mut cur, &mut out);
        }
        out.sort();
        out
    }
}

/// Deglex comparison of monomials.
pub fn monomial_order(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.0.len().cmp(&m2.0.len()).then_with(|| m1.0.cmp(&m2.0))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        monomial_order(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dotted(f, &self.0)
    }
}

impl FromStr for Monomial {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors = s
            .split('.')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<BasisSymbol>, _>>()?;
        Monomial::try_new(factors)
    }
}

/// Ordered nonempty word of letters, the carrier of the shuffle algebra.
///
/// Ordered by length, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<BasisSymbol>);

impl TensorWord {
    pub fn new(letters: Vec<BasisSymbol>) -> Result<Self, ScalarError> {
        if letters.is_empty() {
            Err(ScalarError::EmptyWord)
        } else {
            Ok(TensorWord(letters))
        }
    }

    pub fn letter(b: BasisSymbol) -> Self {
        TensorWord(vec![b])
    }

    pub fn letters(&self) -> &[BasisSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        TensorWord(v)
    }

    pub(crate) fn from_vec_unchecked(v: Vec<BasisSymbol>) -> Self {
        debug_assert!(!v.is_empty());
        TensorWord(v)
    }
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_dotted(f, &self.0)
    }
}

impl FromStr for TensorWord {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .split('.')
            .map(|p| p.trim().parse())
            .collect::<Result<Vec<BasisSymbol>, _>>()?;
        TensorWord::new(letters)
    }
}

fn write_dotted(f: &mut fmt::Formatter<'_>, items: &[BasisSymbol]) -> fmt::Result {
    for (i, s) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(".")?;
        }
        write!(f, "{s}")?;
    }
    Ok(())
}

/// Finite formal linear combination with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<T: Ord> {
    terms: BTreeMap<T, Rational>,
}

impl<T: Ord> Default for LinComb<T> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> LinComb<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: T, coeff: Rational) -> Self {
        let mut lc = Self::zero();
        lc.add_term(key, coeff);
        lc
    }

    pub fn basis(key: T) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (T, Rational)>) -> Self {
        let mut lc = Self::zero();
        for (k, c) in terms {
            lc.add_term(k, c);
        }
        lc
    }

    pub fn add_term(&mut self, key: T, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<T>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn coeff(&self, key: &T) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &T> {
        self.terms.keys()
    }

    /// Largest key in the order of `T`.
    pub fn leading(&self) -> Option<(&T, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, b| a + b)
    }

    /// Extends `f: T -> LinComb<U>` linearly.
    pub fn map_linear<U: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&T) -> Result<LinComb<U>, E>,
    ) -> Result<LinComb<U>, E> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Relabels keys one-to-one (or many-to-one, in which case terms merge).
    pub fn map_keys<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> U) -> LinComb<U> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (T, Rational)> {
        self.terms.into_iter()
    }
}

/// Bilinear extension of `f` from pairs of basis objects to linear combinations.
pub fn lincomb_apply_bilinear<T, S, U, E>(
    u: &LinComb<T>,
    v: &LinComb<S>,
    mut f: impl FnMut(&T, &S) -> Result<LinComb<U>, E>,
) -> Result<LinComb<U>, E>
where
    T: Ord + Clone,
    S: Ord + Clone,
    U: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (t, c) in u.iter() {
        for (s, d) in v.iter() {
            out.add_scaled(&f(t, s)?, &(c * d));
        }
    }
    Ok(out)
}

impl<T: Ord + Clone> Add for LinComb<T> {
    type Output = LinComb<T>;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<T: Ord + Clone> AddAssign for LinComb<T> {
    fn add_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl<T: Ord + Clone> Sub for LinComb<T> {
    type Output = LinComb<T>;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<T: Ord + Clone> SubAssign for LinComb<T> {
    fn sub_assign(&mut self, rhs: Self) {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
    }
}

impl<T: Ord + Clone> Neg for LinComb<T> {
    type Output = LinComb<T>;
    fn neg(self) -> Self {
        LinComb { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<T: Ord + Clone> Mul<&Rational> for &LinComb<T> {
    type Output = LinComb<T>;
    fn mul(self, rhs: &Rational) -> LinComb<T> {
        self.scaled(rhs)
    }
}

impl<T: Ord + Clone> FromIterator<(T, Rational)> for LinComb<T> {
    fn from_iter<I: IntoIterator<Item = (T, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

/// Writes `coeff` in front of a term: `1` is omitted, `-1` becomes `-`.
pub(crate) fn write_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &Rational,
    body: &dyn fmt::Display,
) -> fmt::Result {
    let abs = coeff.abs();
    if first {
        if coeff.is_negative() {
            f.write_str("-")?;
        }
    } else if coeff.is_negative() {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if abs.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{abs} {body}")
    }
}

impl<T: Ord + Clone + fmt::Display> fmt::Display for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            write_term(f, i == 0, c, k)?;
        }
        Ok(())
    }
}

/// Result of [`row_reduce`]: rows in reduced echelon form, sorted by
/// descending leading key, and their leading keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<T: Ord> {
    pub rows: Vec<LinComb<T>>,
    pub leading: Vec<T>,
}

/// Exact Gauss-Jordan elimination where the largest key of a row leads.
///
/// Leading coefficients are normalized to 1 and every leading key is absent
/// from all other rows. Zero rows are dropped.
pub fn row_reduce<T: Ord + Clone>(rows: impl IntoIterator<Item = LinComb<T>>) -> Echelon<T> {
    let mut pivots: BTreeMap<T, LinComb<T>> = BTreeMap::new();
    for row in rows {
        let mut row = reduce_by_pivots(row, &pivots);
        let Some((lead, c)) = row.leading().map(|(k, c)| (k.clone(), c.clone())) else {
            continue;
        };
        row = row.scaled(&c.recip());
        for p in pivots.values_mut() {
            let k = p.coeff(&lead);
            if !k.is_zero() {
                p.add_scaled(&row, &-k);
            }
        }
        pivots.insert(lead, row);
    }
    let mut rows = Vec::with_capacity(pivots.len());
    let mut leading = Vec::with_capacity(pivots.len());
    for (k, r) in pivots.into_iter().rev() {
        leading.push(k);
        rows.push(r);
    }
    Echelon { rows, leading }
}

/// Eliminates every pivot key from `row` (pivots must be mutually reduced).
pub(crate) fn reduce_by_pivots<T: Ord + Clone>(
    mut row: LinComb<T>,
    pivots: &BTreeMap<T, LinComb<T>>,
) -> LinComb<T> {
    let hits: Vec<T> = row.keys().filter(|k| pivots.contains_key(*k)).cloned().collect();
    for k in hits {
        let c = row.coeff(&k);
        if !c.is_zero() {
            row.add_scaled(&pivots[&k], &-c);
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BasisSymbol {
        x.parse().unwrap()
    }

    fn m(x: &str) -> Monomial {
        x.parse().unwrap()
    }

    #[test]
    fn rational_syntax() {
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(ratio(3, -6).to_string(), "-1/2");
        assert_eq!(rat(5).to_string(), "5");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn symbol_order_and_index() {
        assert!(s("a2") < s("a10"));
        assert!(s("a") < s("a1"));
        assert!(s("a9") < s("b"));
        assert_eq!(s("e12").index(), Some(12));
        assert_eq!(s("x01").to_string(), "x01");
        assert_eq!(s("x01").index(), None);
        assert!("1a".parse::<BasisSymbol>().is_err());
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(monomial_order(&m("a"), &m("a")), Ordering::Equal);
        assert_eq!(monomial_order(&m("a.b"), &m("a.a.a")), Ordering::Less);
        assert_eq!(monomial_order(&m("a.b"), &m("a.a")), Ordering::Greater);
        assert_eq!(m("b.a.a").to_string(), "a.a.b");
    }

    #[test]
    fn monomial_enumeration_counts() {
        let basis: Vec<_> = ["a", "b", "c"].iter().map(|x| s(x)).collect();
        // C(n+d-1, d)
        assert_eq!(Monomial::all_of_degree(&basis, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(&basis, 4).len(), 15);
    }

    #[test]
    fn factorizations_of_aab() {
        let f = m("a.a.b").factorizations();
        // {a}{ab}, {ab}{a}, {b}{aa}, {aa}{b}
        assert_eq!(f.len(), 4);
        assert!(f.contains(&(m("a"), m("a.b"))));
        assert!(f.contains(&(m("a.a"), m("b"))));
    }

    #[test]
    fn row_reduce_examples() {
        let e = row_reduce(vec![LinComb::basis(m("b.b"))]);
        assert_eq!(e.leading, vec![m("b.b")]);
        assert_eq!(e.rows, vec![LinComb::basis(m("b.b"))]);

        let e: Echelon<Monomial> = row_reduce(vec![]);
        assert!(e.rows.is_empty() && e.leading.is_empty());

        let (x, y) = (m("x"), m("y"));
        let r1 = LinComb::basis(x.clone()) + LinComb::basis(y.clone());
        let r2 = LinComb::basis(x.clone()) - LinComb::basis(y.clone());
        let e = row_reduce(vec![r1, r2]);
        assert_eq!(e.leading, vec![y.clone(), x.clone()]);
        assert_eq!(e.rows, vec![LinComb::basis(y), LinComb::basis(x)]);
    }

    #[test]
    fn bilinear_examples() {
        let a = TensorWord::letter(s("a"));
        let b = TensorWord::letter(s("b"));
        let u = LinComb::term(a.clone(), rat(2));
        let v = LinComb::term(b.clone(), rat(3));
        let out = lincomb_apply_bilinear(&u, &v, |x, y| {
            Ok::<_, ()>(LinComb::basis(x.concat(y)))
        })
        .unwrap();
        assert_eq!(out, LinComb::term(a.concat(&b), rat(6)));
        let zero: LinComb<TensorWord> = LinComb::zero();
        let out = lincomb_apply_bilinear(&zero, &v, |x, y| {
            Ok::<_, ()>(LinComb::basis(x.concat(y)))
        })
        .unwrap();
        assert!(out.is_zero());
    }

    #[test]
    fn lincomb_display() {
        let ab: TensorWord = "a.b".parse().unwrap();
        let ba: TensorWord = "b.a".parse().unwrap();
        let lc = LinComb::basis(ab) + LinComb::basis(ba.clone());
        assert_eq!(lc.to_string(), "a.b + b.a");
        assert_eq!(LinComb::<TensorWord>::zero().to_string(), "0");
        let lc = LinComb::term(ba, ratio(-1, 3));
        assert_eq!(lc.to_string(), "-1/3 b.a");
    }

    #[test]
    fn cancellation_prunes() {
        let x = m("x");
        let lc = LinComb::basis(x.clone()) - LinComb::basis(x);
        assert!(lc.is_zero());
        assert_eq!(lc.len(), 0);
    }
}
