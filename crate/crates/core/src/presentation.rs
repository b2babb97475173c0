//! Finite-dimensional precommutative (Zinbiel) and postcommutative algebras
//! given by structure constants.
//!
//! A raw [`PrecomTable`] / [`PostcomTable`] can hold anything; the validated
//! [`PrecomPresentation`] / [`PostcomPresentation`] wrappers can only be built
//! from tables that satisfy their variety's identities on all basis triples.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::scalar::{BasisSymbol, LinComb, TensorWord};
use crate::shuffle::half_shuffle;

pub type StructureTable = BTreeMap<(BasisSymbol, BasisSymbol), LinComb<BasisSymbol>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub identity: &'static str,
    pub witness: Vec<BasisSymbol>,
    pub left: LinComb<BasisSymbol>,
    pub right: LinComb<BasisSymbol>,
}

impl fmt::Display for IdentityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|s| s.to_string()).collect();
        write!(f, "{} fails at ({}): left {}, right {}", self.identity, w.join(", "), self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("unknown basis symbol `{0}`")]
    UnknownSymbol(BasisSymbol),
    #[error("duplicate basis symbol `{0}`")]
    DuplicateSymbol(BasisSymbol),
    #[error("empty basis")]
    EmptyBasis,
    #[error("{} identity violation(s); first: {}", .0.len(), .0[0])]
    Violations(Vec<IdentityViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

fn check_basis(basis: &[BasisSymbol]) -> Result<(), PresentationError> {
    if basis.is_empty() {
        return Err(PresentationError::EmptyBasis);
    }
    let mut seen = BTreeSet::new();
    for b in basis {
        if !seen.insert(b) {
            return Err(PresentationError::DuplicateSymbol(b.clone()));
        }
    }
    Ok(())
}

fn check_closed(basis: &[BasisSymbol], table: &StructureTable) -> Result<(), PresentationError> {
    let set: BTreeSet<_> = basis.iter().collect();
    for ((x, y), v) in table {
        for s in [x, y].into_iter().chain(v.keys()) {
            if !set.contains(s) {
                return Err(PresentationError::UnknownSymbol(s.clone()));
            }
        }
    }
    Ok(())
}

fn eval_table(
    basis: &[BasisSymbol],
    table: &StructureTable,
    x: &LinComb<BasisSymbol>,
    y: &LinComb<BasisSymbol>,
) -> Result<LinComb<BasisSymbol>, PresentationError> {
    let known = |s: &BasisSymbol| {
        if basis.contains(s) {
            Ok(())
        } else {
            Err(PresentationError::UnknownSymbol(s.clone()))
        }
    };
    crate::scalar::lincomb_apply_bilinear(x, y, |a, b| {
        known(a)?;
        known(b)?;
        Ok(table.get(&(a.clone(), b.clone())).cloned().unwrap_or_default())
    })
}

fn basis_lc(b: &BasisSymbol) -> LinComb<BasisSymbol> {
    LinComb::basis(b.clone())
}

/// Unvalidated Zinbiel structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecomTable {
    pub basis: Vec<BasisSymbol>,
    pub succ: StructureTable,
}

impl PrecomTable {
    pub fn new(basis: Vec<BasisSymbol>) -> Self {
        PrecomTable { basis, succ: BTreeMap::new() }
    }

    pub fn set_succ(&mut self, x: &str, y: &str, value: LinComb<BasisSymbol>) -> &mut Self {
        self.succ.insert((BasisSymbol::new(x), BasisSymbol::new(y)), value);
        self
    }

    pub fn succ_eval(
        &self,
        x: &LinComb<BasisSymbol>,
        y: &LinComb<BasisSymbol>,
    ) -> Result<LinComb<BasisSymbol>, PresentationError> {
        eval_table(&self.basis, &self.succ, x, y)
    }

    fn succ_basis(&self, x: &BasisSymbol, y: &BasisSymbol) -> LinComb<BasisSymbol> {
        self.succ.get(&(x.clone(), y.clone())).cloned().unwrap_or_default()
    }
}

/// Checks `(x1 ≻ x2 + x2 ≻ x1) ≻ x3 = x1 ≻ (x2 ≻ x3)` on every basis triple.
pub fn check_zinbiel(p: &PrecomTable) -> Vec<IdentityViolation> {
    let mut out = Vec::new();
    let ev = |x: &LinComb<BasisSymbol>, y: &LinComb<BasisSymbol>| {
        p.succ_eval(x, y).unwrap_or_default()
    };
    for x1 in &p.basis {
        for x2 in &p.basis {
            let s = p.succ_basis(x1, x2) + p.succ_basis(x2, x1);
            for x3 in &p.basis {
                let left = ev(&s, &basis_lc(x3));
                let right = ev(&basis_lc(x1), &p.succ_basis(x2, x3));
                if left != right {
                    out.push(IdentityViolation {
                        identity: "precommutative",
                        witness: vec![x1.clone(), x2.clone(), x3.clone()],
                        left,
                        right,
                    });
                }
            }
        }
    }
    out
}

/// A Zinbiel algebra known to satisfy its identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecomPresentation(PrecomTable);

impl PrecomPresentation {
    pub fn new(table: PrecomTable) -> Result<Self, PresentationError> {
        check_basis(&table.basis)?;
        check_closed(&table.basis, &table.succ)?;
        let v = check_zinbiel(&table);
        if !v.is_empty() {
            return Err(PresentationError::Violations(v));
        }
        Ok(PrecomPresentation(table))
    }

    pub fn table(&self) -> &PrecomTable {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    /// `b ≻ a` for basis elements.
    pub fn succ(&self, b: &BasisSymbol, a: &BasisSymbol) -> LinComb<BasisSymbol> {
        self.0.succ_basis(b, a)
    }

    /// All products zero.
    pub fn trivial(basis: &[&str]) -> Self {
        Self::new(PrecomTable::new(basis.iter().map(|s| BasisSymbol::new(*s)).collect()))
            .expect("zero products satisfy every identity")
    }

    /// Two-dimensional algebra with `a ≻ a = b` and all other products zero.
    pub fn two_dim_nilpotent() -> Self {
        let mut t = PrecomTable::new(vec![BasisSymbol::new("a"), BasisSymbol::new("b")]);
        t.set_succ("a", "a", LinComb::basis(BasisSymbol::new("b")));
        Self::new(t).expect("a≻a=b is Zinbiel")
    }
}

impl Deref for PrecomPresentation {
    type Target = PrecomTable;
    fn deref(&self) -> &PrecomTable {
        &self.0
    }
}

/// Unvalidated postcommutative structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostcomTable {
    pub basis: Vec<BasisSymbol>,
    pub succ: StructureTable,
    pub perp: StructureTable,
}

impl PostcomTable {
    pub fn new(basis: Vec<BasisSymbol>) -> Self {
        PostcomTable { basis, succ: BTreeMap::new(), perp: BTreeMap::new() }
    }

    pub fn set_succ(&mut self, x: &str, y: &str, value: LinComb<BasisSymbol>) -> &mut Self {
        self.succ.insert((BasisSymbol::new(x), BasisSymbol::new(y)), value);
        self
    }

    /// Sets both `x ⊥ y` and `y ⊥ x`.
    pub fn set_perp(&mut self, x: &str, y: &str, value: LinComb<BasisSymbol>) -> &mut Self {
        let (x, y) = (BasisSymbol::new(x), BasisSymbol::new(y));
        self.perp.insert((y.clone(), x.clone()), value.clone());
        self.perp.insert((x, y), value);
        self
    }

    pub fn succ_eval(
        &self,
        x: &LinComb<BasisSymbol>,
        y: &LinComb<BasisSymbol>,
    ) -> Result<LinComb<BasisSymbol>, PresentationError> {
        eval_table(&self.basis, &self.succ, x, y)
    }

    pub fn perp_eval(
        &self,
        x: &LinComb<BasisSymbol>,
        y: &LinComb<BasisSymbol>,
    ) -> Result<LinComb<BasisSymbol>, PresentationError> {
        eval_table(&self.basis, &self.perp, x, y)
    }
}

/// Checks the three mixed postcommutative identities plus commutativity and
/// associativity of `⊥` on every basis triple.
pub fn check_postcom(p: &PostcomTable) -> Vec<IdentityViolation> {
    let mut out = Vec::new();
    let succ = |x: &LinComb<BasisSymbol>, y: &LinComb<BasisSymbol>| p.succ_eval(x, y).unwrap_or_default();
    let perp = |x: &LinComb<BasisSymbol>, y: &LinComb<BasisSymbol>| p.perp_eval(x, y).unwrap_or_default();
    let mut push = |identity, witness: Vec<&BasisSymbol>, left: LinComb<BasisSymbol>, right: LinComb<BasisSymbol>| {
        if left != right {
            out.push(IdentityViolation {
                identity,
                witness: witness.into_iter().cloned().collect(),
                left,
                right,
            });
        }
    };
    for x in &p.basis {
        let xl = basis_lc(x);
        for y in &p.basis {
            let yl = basis_lc(y);
            push("perp commutativity", vec![x, y], perp(&xl, &yl), perp(&yl, &xl));
        }
    }
    for x in &p.basis {
        let xl = basis_lc(x);
        for y in &p.basis {
            let yl = basis_lc(y);
            let xy = succ(&xl, &yl);
            for z in &p.basis {
                let zl = basis_lc(z);
                let s = xy.clone() + succ(&yl, &xl) + perp(&xl, &yl);
                push("postcommutative (x≻y + y≻x + x⊥y)≻z = x≻(y≻z)", vec![x, y, z], succ(&s, &zl), succ(&xl, &succ(&yl, &zl)));
                push("postcommutative x≻(y⊥z) = (x≻y)⊥z", vec![x, y, z], succ(&xl, &perp(&yl, &zl)), perp(&xy, &zl));
                push("postcommutative (x≻y)⊥z = y⊥(x≻z)", vec![x, y, z], perp(&xy, &zl), perp(&yl, &succ(&xl, &zl)));
                push("perp associativity", vec![x, y, z], perp(&perp(&xl, &yl), &zl), perp(&xl, &perp(&yl, &zl)));
            }
        }
    }
    out
}

/// A postcommutative algebra known to satisfy its identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostcomPresentation(PostcomTable);

impl PostcomPresentation {
    pub fn new(table: PostcomTable) -> Result<Self, PresentationError> {
        check_basis(&table.basis)?;
        check_closed(&table.basis, &table.succ)?;
        check_closed(&table.basis, &table.perp)?;
        let v = check_postcom(&table);
        if !v.is_empty() {
            return Err(PresentationError::Violations(v));
        }
        Ok(PostcomPresentation(table))
    }

    pub fn table(&self) -> &PostcomTable {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.basis.len()
    }

    pub fn succ(&self, b: &BasisSymbol, a: &BasisSymbol) -> LinComb<BasisSymbol> {
        self.0.succ.get(&(b.clone(), a.clone())).cloned().unwrap_or_default()
    }

    pub fn perp(&self, a: &BasisSymbol, b: &BasisSymbol) -> LinComb<BasisSymbol> {
        self.0.perp.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn trivial(basis: &[&str]) -> Self {
        Self::new(PostcomTable::new(basis.iter().map(|s| BasisSymbol::new(*s)).collect()))
            .expect("zero products satisfy every identity")
    }

    /// One-dimensional: `e ⊥ e = e`, `e ≻ e = 0`.
    pub fn idempotent_line() -> Self {
        let mut t = PostcomTable::new(vec![BasisSymbol::new("e")]);
        t.set_perp("e", "e", LinComb::basis(BasisSymbol::new("e")));
        Self::new(t).expect("idempotent line is postcommutative")
    }

    /// `k²` with componentwise product and `x ≻ y = P(x)·y`, where `P` is the
    /// negated partial-sum operator (a unit-weight Rota-Baxter operator).
    pub fn partial_sums_plane() -> Self {
        use crate::scalar::rat;
        let e = |s| BasisSymbol::new(s);
        let mut t = PostcomTable::new(vec![e("e1"), e("e2")]);
        t.set_perp("e1", "e1", LinComb::basis(e("e1")));
        t.set_perp("e2", "e2", LinComb::basis(e("e2")));
        t.set_succ("e1", "e1", LinComb::term(e("e1"), rat(-1)));
        t.set_succ("e1", "e2", LinComb::term(e("e2"), rat(-1)));
        t.set_succ("e2", "e2", LinComb::term(e("e2"), rat(-1)));
        Self::new(t).expect("partial sums give a postcommutative algebra")
    }

    /// `k²` with componentwise product and zero `≻`.
    pub fn split_plane() -> Self {
        let e = |s| BasisSymbol::new(s);
        let mut t = PostcomTable::new(vec![e("e1"), e("e2")]);
        t.set_perp("e1", "e1", LinComb::basis(e("e1")));
        t.set_perp("e2", "e2", LinComb::basis(e("e2")));
        Self::new(t).expect("split plane is postcommutative")
    }
}

impl Deref for PostcomPresentation {
    type Target = PostcomTable;
    fn deref(&self) -> &PostcomTable {
        &self.0
    }
}

/// Symbol naming the tensor word `w` in a truncated free Zinbiel algebra.
fn word_symbol(w: &[BasisSymbol], joined: bool) -> BasisSymbol {
    let parts: Vec<String> = w.iter().map(|s| s.to_string()).collect();
    BasisSymbol::new(parts.join(if joined { "_" } else { "" }))
}

/// Free Zinbiel algebra on `generators` modulo words longer than `max_degree`.
///
/// Basis symbols are the words themselves (`xy` for single-letter generators,
/// `x1_x2` otherwise); the product is the half-shuffle with long terms dropped.
pub fn truncated_free_zinbiel(generators: &[BasisSymbol], max_degree: usize) -> PrecomPresentation {
    assert!(max_degree >= 1 && !generators.is_empty());
    let joined = generators.iter().any(|g| g.to_string().len() > 1);
    let mut words: Vec<Vec<BasisSymbol>> = generators.iter().map(|g| vec![g.clone()]).collect();
    let mut frontier = words.clone();
    for _ in 1..max_degree {
        let next: Vec<Vec<BasisSymbol>> = frontier
            .iter()
            .flat_map(|w| {
                generators.iter().map(move |g| {
                    let mut v = w.clone();
                    v.push(g.clone());
                    v
                })
            })
            .collect();
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let name: BTreeMap<Vec<BasisSymbol>, BasisSymbol> =
        words.iter().map(|w| (w.clone(), word_symbol(w, joined))).collect();
    let mut table = PrecomTable::new(words.iter().map(|w| name[w].clone()).collect());
    for u in &words {
        for v in &words {
            if u.len() + v.len() > max_degree {
                continue;
            }
            let prod = half_shuffle(
                &TensorWord::new(u.clone()).expect("nonempty"),
                &TensorWord::new(v.clone()).expect("nonempty"),
            );
            let value: LinComb<BasisSymbol> =
                prod.into_terms().map(|(w, c)| (name[w.letters()].clone(), c)).collect();
            if !value.is_zero() {
                table.succ.insert((name[u].clone(), name[v].clone()), value);
            }
        }
    }
    PrecomPresentation::new(table).expect("truncations of free Zinbiel algebras are Zinbiel")
}

/// A presentation read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Zinbiel(PrecomPresentation),
    Postcommutative(PostcomPresentation),
}

impl Presentation {
    pub fn kind(&self) -> &'static str {
        match self {
            Presentation::Zinbiel(_) => "zinbiel",
            Presentation::Postcommutative(_) => "postcommutative",
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Presentation::Zinbiel(p) => p.dim(),
            Presentation::Postcommutative(p) => p.dim(),
        }
    }
}

/// Parsed but unvalidated file contents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawPresentation {
    Zinbiel(PrecomTable),
    Postcommutative(PostcomTable),
}

impl RawPresentation {
    pub fn violations(&self) -> Vec<IdentityViolation> {
        match self {
            RawPresentation::Zinbiel(t) => check_zinbiel(t),
            RawPresentation::Postcommutative(t) => check_postcom(t),
        }
    }

    pub fn validate(self) -> Result<Presentation, PresentationError> {
        Ok(match self {
            RawPresentation::Zinbiel(t) => Presentation::Zinbiel(PrecomPresentation::new(t)?),
            RawPresentation::Postcommutative(t) => Presentation::Postcommutative(PostcomPresentation::new(t)?),
        })
    }
}

/// Parses and validates a presentation file.
pub fn load_presentation(text: &str) -> Result<Presentation, LoadError> {
    Ok(parse_presentation(text)?.validate()?)
}

/// Parses a presentation file without checking identities.
///
/// ```text
/// basis a b
/// zinbiel
/// succ a a = 1 b      # comment
/// ```
pub fn parse_presentation(text: &str) -> Result<RawPresentation, LoadError> {
    let err = |line: usize, message: String| LoadError::Syntax { line, message };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (ln, first) = lines.next().ok_or_else(|| err(1, "missing `basis` line".into()))?;
    let mut words = first.split_whitespace();
    if words.next() != Some("basis") {
        return Err(err(ln, "expected `basis <symbols>`".into()));
    }
    let basis = words
        .map(|w| w.parse::<BasisSymbol>().map_err(|e| err(ln, e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    if basis.is_empty() {
        return Err(err(ln, "empty basis".into()));
    }
    let mut seen = BTreeSet::new();
    for b in &basis {
        if !seen.insert(b.clone()) {
            return Err(err(ln, format!("duplicate basis symbol `{b}`")));
        }
    }

    let (ln, kind) = lines.next().ok_or_else(|| err(ln + 1, "missing `zinbiel` or `postcommutative` line".into()))?;
    let post = match kind {
        "zinbiel" => false,
        "postcommutative" => true,
        other => return Err(err(ln, format!("expected `zinbiel` or `postcommutative`, found `{other}`"))),
    };

    let mut succ = StructureTable::new();
    let mut perp = StructureTable::new();
    let known = |ln: usize, s: &str| -> Result<BasisSymbol, LoadError> {
        let sym: BasisSymbol = s.parse().map_err(|e: crate::scalar::ScalarError| err(ln, e.to_string()))?;
        if seen.contains(&sym) {
            Ok(sym)
        } else {
            Err(err(ln, format!("unknown symbol `{s}`")))
        }
    };
    for (ln, line) in lines {
        let (lhs, rhs) = line.split_once('=').ok_or_else(|| err(ln, "expected `=`".into()))?;
        let lhs: Vec<&str> = lhs.split_whitespace().collect();
        let [op, x, y] = lhs.as_slice() else {
            return Err(err(ln, "expected `succ|perp <b1> <b2> = ...`".into()));
        };
        let key = (known(ln, x)?, known(ln, y)?);
        let value = parse_rhs(rhs, &|s| known(ln, s)).map_err(|e| match e {
            LoadError::Syntax { message, .. } => err(ln, message),
            other => other,
        })?;
        let table = match *op {
            "succ" => &mut succ,
            "perp" if post => &mut perp,
            "perp" => return Err(err(ln, "`perp` entries need a postcommutative presentation".into())),
            other => return Err(err(ln, format!("unknown product `{other}`"))),
        };
        if table.insert(key.clone(), value).is_some() {
            return Err(err(ln, format!("duplicate entry for ({}, {})", key.0, key.1)));
        }
    }

    if post {
        let mirrored: Vec<_> = perp
            .iter()
            .filter(|((x, y), _)| !perp.contains_key(&(y.clone(), x.clone())))
            .map(|((x, y), v)| ((y.clone(), x.clone()), v.clone()))
            .collect();
        perp.extend(mirrored);
        Ok(RawPresentation::Postcommutative(PostcomTable { basis, succ, perp }))
    } else {
        Ok(RawPresentation::Zinbiel(PrecomTable { basis, succ }))
    }
}

/// A linear combination of basis symbols such as `2 a - 1/3 b` or `-e1`, or `0`.
fn parse_rhs(
    text: &str,
    known: &dyn Fn(&str) -> Result<BasisSymbol, LoadError>,
) -> Result<LinComb<BasisSymbol>, LoadError> {
    let syntax = |m: String| LoadError::Syntax { line: 0, message: m };
    if text.trim() == "0" {
        return Ok(LinComb::zero());
    }
    let e = crate::expr::parse_expr(text).map_err(|e| syntax(e.to_string()))?;
    let mut out = LinComb::zero();
    for term in &e.terms {
        match term.factors.as_slice() {
            [crate::expr::Factor::Symbol(b)] => out.add_term(known(&b.to_string())?, term.coeff.clone()),
            _ => return Err(syntax(format!("expected a linear combination of basis symbols, found `{text}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn s(x: &str) -> BasisSymbol {
        BasisSymbol::new(x)
    }

    fn l(x: &str) -> LinComb<BasisSymbol> {
        LinComb::basis(s(x))
    }

    #[test]
    fn succ_eval_examples() {
        let p = PrecomPresentation::two_dim_nilpotent();
        assert_eq!(p.succ_eval(&l("a"), &l("a")).unwrap(), l("b"));
        assert!(p.succ_eval(&l("a"), &l("b")).unwrap().is_zero());
        assert_eq!(p.succ_eval(&(l("a") + l("b")), &l("a")).unwrap(), l("b"));
        assert_eq!(
            p.succ_eval(&l("q"), &l("a")).unwrap_err(),
            PresentationError::UnknownSymbol(s("q"))
        );
    }

    #[test]
    fn zinbiel_checker() {
        assert!(check_zinbiel(&PrecomTable::new(vec![s("a"), s("b")])).is_empty());
        assert!(check_zinbiel(PrecomPresentation::two_dim_nilpotent().table()).is_empty());
        let mut t = PrecomTable::new(vec![s("e")]);
        t.set_succ("e", "e", l("e"));
        let v = check_zinbiel(&t);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].witness, vec![s("e"), s("e"), s("e")]);
        assert_eq!(v[0].left, LinComb::term(s("e"), rat(2)));
        assert_eq!(v[0].right, l("e"));
        assert!(PrecomPresentation::new(t).is_err());
    }

    #[test]
    fn componentwise_product_is_not_zinbiel() {
        // k^n with a≻b = ab fails at (e_i, e_i, e_i)
        let mut t = PrecomTable::new(vec![s("e1"), s("e2")]);
        t.set_succ("e1", "e1", l("e1"));
        t.set_succ("e2", "e2", l("e2"));
        let v = check_zinbiel(&t);
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.left == x.right.scaled(&rat(2))));
    }

    #[test]
    fn postcom_checker() {
        assert!(check_postcom(PostcomPresentation::idempotent_line().table()).is_empty());
        assert!(check_postcom(&PostcomTable::new(vec![s("e")])).is_empty());
        let mut t = PostcomTable::new(vec![s("e")]);
        t.set_perp("e", "e", l("e"));
        t.set_succ("e", "e", l("e"));
        let v = check_postcom(&t);
        assert_eq!(v.len(), 1);
        assert!(v[0].identity.contains("(x≻y + y≻x + x⊥y)≻z"));
        assert_eq!(v[0].left, LinComb::term(s("e"), rat(3)));
        assert_eq!(v[0].right, l("e"));
    }

    #[test]
    fn builtin_postcom_presentations_validate() {
        PostcomPresentation::partial_sums_plane();
        PostcomPresentation::split_plane();
        // e ≻ e = -e on the idempotent line is the other unit-weight operator
        let mut t = PostcomTable::new(vec![s("e")]);
        t.set_perp("e", "e", l("e"));
        t.set_succ("e", "e", LinComb::term(s("e"), rat(-1)));
        assert!(PostcomPresentation::new(t).is_ok());
    }

    #[test]
    fn truncated_free_zinbiel_examples() {
        let x = s("x");
        let p = truncated_free_zinbiel(&[x.clone()], 2);
        assert_eq!(p.basis, vec![s("x"), s("xx")]);
        assert_eq!(p.succ(&s("x"), &s("x")), l("xx"));
        assert!(p.succ(&s("x"), &s("xx")).is_zero());

        let p = truncated_free_zinbiel(&[s("x"), s("y")], 2);
        assert_eq!(p.succ(&s("x"), &s("y")), l("xy"));
        assert_eq!(p.succ(&s("y"), &s("x")), l("yx"));

        let p = truncated_free_zinbiel(&[s("x"), s("y")], 1);
        assert!(p.succ.is_empty());

        let p = truncated_free_zinbiel(&[s("x")], 3);
        assert_eq!(p.succ(&s("x"), &s("xx")), LinComb::term(s("xxx"), rat(2)));
    }

    #[test]
    fn truncations_pass_the_checker() {
        for gens in [vec![s("x")], vec![s("x"), s("y")]] {
            for d in 1..=4 {
                let p = truncated_free_zinbiel(&gens, d);
                assert!(check_zinbiel(p.table()).is_empty());
            }
        }
    }

    #[test]
    fn parse_zinbiel_file() {
        let text = "# two-dim\nbasis a b\nzinbiel\nsucc a a = 1 b # a≻a\n";
        let p = load_presentation(text).unwrap();
        assert_eq!(p, Presentation::Zinbiel(PrecomPresentation::two_dim_nilpotent()));
    }

    #[test]
    fn parse_postcom_file() {
        let text = "basis e1 e2\npostcommutative\nperp e1 e1 = e1\nperp e2 e2 = e2\n\
                    succ e1 e1 = -1 e1\nsucc e1 e2 = -1 e2\nsucc e2 e2 = -1 e2\n";
        let p = load_presentation(text).unwrap();
        assert_eq!(p, Presentation::Postcommutative(PostcomPresentation::partial_sums_plane()));
    }

    #[test]
    fn rhs_forms() {
        let text = "basis a b c\nzinbiel\nsucc a a = 1/2 b - c + 3 a\nsucc b b = 0\n";
        let RawPresentation::Zinbiel(t) = parse_presentation(text).unwrap() else { panic!() };
        let v = &t.succ[&(s("a"), s("a"))];
        assert_eq!(v.coeff(&s("b")), crate::scalar::ratio(1, 2));
        assert_eq!(v.coeff(&s("c")), rat(-1));
        assert_eq!(v.coeff(&s("a")), rat(3));
        assert!(t.succ[&(s("b"), s("b"))].is_zero());
        let text = "basis a b\nzinbiel\nsucc a a = -b\nsucc b a = -2*a + b\n";
        let RawPresentation::Zinbiel(t) = parse_presentation(text).unwrap() else { panic!() };
        assert_eq!(t.succ[&(s("a"), s("a"))], LinComb::term(s("b"), rat(-1)));
        assert_eq!(t.succ[&(s("b"), s("a"))].coeff(&s("a")), rat(-2));
        assert!(parse_presentation("basis a\nzinbiel\nsucc a a = R(a)\n").is_err());
    }

    #[test]
    fn load_errors_carry_line_numbers() {
        let e = load_presentation("basis a b\nzinbiel\nsucc a q = b\n").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 3, .. }), "{e}");
        let e = load_presentation("basis a\nlie\n").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 2, .. }));
        let e = load_presentation("basis a b\nzinbiel\n\nsucc a a b\n").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 4, .. }));
        let e = load_presentation("basis a\nzinbiel\nperp a a = a\n").unwrap_err();
        assert!(matches!(e, LoadError::Syntax { line: 3, .. }));
        let e = load_presentation("basis e\nzinbiel\nsucc e e = e\n").unwrap_err();
        assert!(matches!(e, LoadError::Invalid(PresentationError::Violations(_))));
    }
}
