//! Universal enveloping commutative Rota-Baxter algebra (weight 0) of a
//! Zinbiel algebra `C` with basis `B`.
//!
//! The algebra is spanned by E-words over the standard monomials `E₀` of
//! `A = k[B]/I`:
//!
//! 1. `w` for `w ∈ E₀`;
//! 2. `R(u)` for any E-word `u`;
//! 3. `R(x)·w` for `w ∈ E₀` when `R(x)` is good, i.e. `x` is neither a single
//!    basis element nor of the form `R(y)·b` with `b ∈ B`.
//!
//! The product `*` is defined by recursion on the pair of word types. Every
//! recursive call strictly lowers `(total R-degree, total degree, case)` in
//! the lexicographic order; a violation is reported as
//! [`EnvError::MeasureViolation`] rather than looping.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::expr::{RbAlgebra, RbExpr};
use crate::presentation::PrecomPresentation;
use crate::quotient::{QuotientAlgebra, QuotientError};
use crate::scalar::{BasisSymbol, LinComb, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvError {
    #[error(transparent)]
    Quotient(#[from] QuotientError),
    #[error("symbol `{0}` is not in the presentation basis")]
    UnknownSymbol(BasisSymbol),
    #[error("recursion measure did not descend: {child} after {parent} while multiplying {left} and {right}")]
    MeasureViolation { parent: String, child: String, left: String, right: String },
    #[error("product left the E-word grammar: {0}")]
    InvalidWord(String),
}

/// Normal-form word of the weight-0 enveloping algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EWordPre {
    /// `w ∈ E₀`.
    Mono(Monomial),
    /// `R(u)`.
    R(Box<EWordPre>),
    /// `R(x)·w`, stored as `(x, w)`.
    RMono(Box<EWordPre>, Monomial),
}

impl EWordPre {
    pub fn letter(b: BasisSymbol) -> Self {
        EWordPre::Mono(Monomial::single(b))
    }

    pub fn r(u: EWordPre) -> Self {
        EWordPre::R(Box::new(u))
    }

    pub fn r_mono(x: EWordPre, w: Monomial) -> Self {
        EWordPre::RMono(Box::new(x), w)
    }

    /// 1, 2 or 3.
    pub fn word_type(&self) -> u8 {
        match self {
            EWordPre::Mono(_) => 1,
            EWordPre::R(_) => 2,
            EWordPre::RMono(..) => 3,
        }
    }

    pub fn r_degree(&self) -> usize {
        match self {
            EWordPre::Mono(_) => 0,
            EWordPre::R(u) | EWordPre::RMono(u, _) => 1 + u.r_degree(),
        }
    }

    /// Degree as a standard-base word: `|w|`, `1` for `R(u)`, `|w| + 1` for `R(x)·w`.
    pub fn degree(&self) -> usize {
        match self {
            EWordPre::Mono(w) => w.degree(),
            EWordPre::R(_) => 1,
            EWordPre::RMono(_, w) => w.degree() + 1,
        }
    }

    /// Number of basis-element occurrences in the whole word.
    pub fn letter_count(&self) -> usize {
        match self {
            EWordPre::Mono(w) => w.degree(),
            EWordPre::R(u) => u.letter_count(),
            EWordPre::RMono(x, w) => x.letter_count() + w.degree(),
        }
    }

    /// Largest monomial degree occurring anywhere in the word.
    fn max_monomial_degree(&self) -> usize {
        match self {
            EWordPre::Mono(w) => w.degree(),
            EWordPre::R(u) => u.max_monomial_degree(),
            EWordPre::RMono(x, w) => x.max_monomial_degree().max(w.degree()),
        }
    }

    pub fn to_expr(&self) -> RbExpr {
        let syms = |w: &Monomial| w.factors().iter().cloned().map(RbExpr::symbol).collect::<Vec<_>>();
        match self {
            EWordPre::Mono(w) => RbExpr::product(syms(w)),
            EWordPre::R(u) => RbExpr::rb(u.to_expr()),
            EWordPre::RMono(x, w) => {
                let mut parts = vec![RbExpr::rb(x.to_expr())];
                parts.extend(syms(w));
                RbExpr::product(parts)
            }
        }
    }

    fn structural_cmp(&self, other: &Self) -> Ordering {
        use EWordPre::*;
        match (self, other) {
            (Mono(a), Mono(b)) => a.cmp(b),
            (R(a), R(b)) => a.cmp(b),
            (RMono(a, w), RMono(b, v)) => a.cmp(b).then_with(|| w.cmp(v)),
            _ => self.word_type().cmp(&other.word_type()),
        }
    }
}

/// Whether `R(u)` is good: `u` is not a basis element and not `R(x)·b`.
pub fn is_good(u: &EWordPre) -> bool {
    match u {
        EWordPre::Mono(w) | EWordPre::RMono(_, w) => w.degree() != 1,
        EWordPre::R(_) => true,
    }
}

/// Syntactic validity over a quotient: monomials standard, type-3 heads good.
pub fn is_valid(u: &EWordPre, q: &QuotientAlgebra) -> Result<bool, QuotientError> {
    Ok(match u {
        EWordPre::Mono(w) => q.is_standard(w)?,
        EWordPre::R(x) => is_valid(x, q)?,
        EWordPre::RMono(x, w) => is_good(x) && q.is_standard(w)? && is_valid(x, q)?,
    })
}

/// Terms sort by R-degree, then degree, then structure.
impl Ord for EWordPre {
    fn cmp(&self, other: &Self) -> Ordering {
        self.r_degree()
            .cmp(&other.r_degree())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for EWordPre {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EWordPre {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EWordPre::Mono(w) => write!(f, "{w}"),
            EWordPre::R(u) => write!(f, "R({u})"),
            EWordPre::RMono(x, w) => write!(f, "R({x}).{w}"),
        }
    }
}

/// `R` applied termwise.
pub fn rb_apply(x: &LinComb<EWordPre>) -> LinComb<EWordPre> {
    x.map_keys(|u| EWordPre::r(u.clone()))
}

/// Recursion measure: (total R-degree, total degree, case rank).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Measure {
    pub r_degree: usize,
    pub degree: usize,
    pub case: u8,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, d={}, case={})", self.r_degree, self.degree, self.case)
    }
}

/// Rank of an unordered pair of word types: 1–1, 1–2, 1–3, 2–2, 2–3, 3–3.
pub(crate) fn case_rank(t1: u8, t2: u8) -> u8 {
    match (t1.min(t2), t1.max(t2)) {
        (1, 1) => 0,
        (1, 2) => 1,
        (1, 3) => 2,
        (2, 2) => 3,
        (2, 3) => 4,
        _ => 5,
    }
}

fn monos(lc: LinComb<Monomial>) -> LinComb<EWordPre> {
    lc.map_keys(|m| EWordPre::Mono(m.clone()))
}

struct Star<'a> {
    q: &'a QuotientAlgebra,
}

impl Star<'_> {
    fn star(&self, v: &EWordPre, u: &EWordPre, parent: Option<Measure>) -> Result<LinComb<EWordPre>, EnvError> {
        let (v, u) = if v.word_type() <= u.word_type() { (v, u) } else { (u, v) };
        let m = Measure {
            r_degree: v.r_degree() + u.r_degree(),
            degree: v.degree() + u.degree(),
            case: case_rank(v.word_type(), u.word_type()),
        };
        if let Some(parent) = parent {
            if m >= parent {
                return Err(EnvError::MeasureViolation {
                    parent: parent.to_string(),
                    child: m.to_string(),
                    left: v.to_string(),
                    right: u.to_string(),
                });
            }
        }
        use EWordPre::*;
        match (v, u) {
            (Mono(w1), Mono(w2)) => Ok(monos(self.q.multiply(&mono(w1), &mono(w2))?)),
            (Mono(w), R(p)) => self.mono_times_r(w, p, m),
            (Mono(w1), RMono(x, w2)) => Ok(attach_good(x, self.q.multiply(&mono(w1), &mono(w2))?)),
            (R(p), R(s)) => {
                let mut inner = self.star(v, s, Some(m))?;
                inner += self.star(u, p, Some(m))?;
                Ok(rb_apply(&inner))
            }
            (R(x), RMono(y, w)) => self.r_times_r_mono(v, x, y, w, m),
            (RMono(x, w1), RMono(y, w2)) => {
                let rr = self.star(&EWordPre::r((**x).clone()), &EWordPre::r((**y).clone()), Some(m))?;
                attach(&rr, &self.q.multiply(&mono(w1), &mono(w2))?)
            }
            _ => unreachable!("pair is ordered by type"),
        }
    }

    fn star_lc(
        &self,
        x: &LinComb<EWordPre>,
        y: &LinComb<EWordPre>,
        parent: Option<Measure>,
    ) -> Result<LinComb<EWordPre>, EnvError> {
        crate::scalar::lincomb_apply_bilinear(x, y, |a, b| self.star(a, b, parent))
    }

    /// `w'a * R(p)`.
    fn mono_times_r(&self, v: &Monomial, p: &EWordPre, m: Measure) -> Result<LinComb<EWordPre>, EnvError> {
        let (a, rest) = v.split_first();
        match p {
            EWordPre::Mono(bm) if bm.degree() == 1 => {
                let b = &bm.factors()[0];
                Ok(monos(self.q.times_succ(rest.as_ref(), b, &a)?))
            }
            EWordPre::RMono(x, bm) if bm.degree() == 1 => {
                // R(x)(w'·(b≻a)) − R(x*R(b))·w'a
                let b = &bm.factors()[0];
                let first = attach_good(x, self.q.times_succ(rest.as_ref(), b, &a)?);
                let xb = self.star(x, &EWordPre::r(EWordPre::letter(b.clone())), Some(m))?;
                let second = attach(&rb_apply(&xb), &mono(v))?;
                Ok(first - second)
            }
            _ => Ok(LinComb::basis(EWordPre::r_mono(p.clone(), v.clone()))),
        }
    }

    /// `R(x) * R(y)·w` where `rx` is the word `R(x)`.
    fn r_times_r_mono(
        &self,
        rx: &EWordPre,
        x: &EWordPre,
        y: &EWordPre,
        w: &Monomial,
        m: Measure,
    ) -> Result<LinComb<EWordPre>, EnvError> {
        let (a, rest) = w.split_first();
        let ry = EWordPre::r(y.clone());
        match x {
            EWordPre::Mono(bm) if bm.degree() == 1 => {
                let b = &bm.factors()[0];
                Ok(attach_good(y, self.q.times_succ(rest.as_ref(), b, &a)?))
            }
            EWordPre::RMono(z, bm) if bm.degree() == 1 => {
                // (R(y)*R(z))(w'·(b≻a)) − (R(y)*R(z*R(b)))·w
                let b = &bm.factors()[0];
                let yz = self.star(&ry, &EWordPre::r((**z).clone()), Some(m))?;
                let first = attach(&yz, &self.q.times_succ(rest.as_ref(), b, &a)?)?;
                let zb = self.star(z, &EWordPre::r(EWordPre::letter(b.clone())), Some(m))?;
                let y_zb = self.star_lc(&LinComb::basis(ry), &rb_apply(&zb), Some(m))?;
                let second = attach(&y_zb, &mono(w))?;
                Ok(first - second)
            }
            _ => {
                let yx = self.star(&ry, rx, Some(m))?;
                attach(&yx, &mono(w))
            }
        }
    }
}

fn mono(w: &Monomial) -> LinComb<Monomial> {
    LinComb::basis(w.clone())
}

/// `R(x)·w` for each standard monomial `w` in `ws`; `R(x)` must be good.
fn attach_good(x: &EWordPre, ws: LinComb<Monomial>) -> LinComb<EWordPre> {
    debug_assert!(is_good(x));
    ws.map_keys(|w| EWordPre::r_mono(x.clone(), w.clone()))
}

/// Juxtaposes type-2 words with monomials; every head must be good.
fn attach(heads: &LinComb<EWordPre>, ws: &LinComb<Monomial>) -> Result<LinComb<EWordPre>, EnvError> {
    let mut out = LinComb::zero();
    for (h, c) in heads.iter() {
        let EWordPre::R(x) = h else {
            return Err(EnvError::InvalidWord(format!("expected a type-2 word, got {h}")));
        };
        if !is_good(x) {
            return Err(EnvError::InvalidWord(format!("{h} is not good")));
        }
        for (w, d) in ws.iter() {
            out.add_term(EWordPre::r_mono((**x).clone(), w.clone()), c * d);
        }
    }
    Ok(out)
}

/// The enveloping algebra of one Zinbiel presentation.
///
/// Holds a quotient `k[B]/I` that is extended to larger degrees on demand;
/// results never depend on how far it has been built.
#[derive(Debug)]
pub struct EnvPre {
    presentation: PrecomPresentation,
    quotient: RwLock<Arc<QuotientAlgebra>>,
}

impl Clone for EnvPre {
    fn clone(&self) -> Self {
        EnvPre { presentation: self.presentation.clone(), quotient: RwLock::new(self.quotient()) }
    }
}

const INITIAL_DEGREE: usize = 4;

impl EnvPre {
    pub fn new(presentation: PrecomPresentation) -> Self {
        let q = QuotientAlgebra::build(&presentation, INITIAL_DEGREE);
        EnvPre { presentation, quotient: RwLock::new(Arc::new(q)) }
    }

    pub fn from_quotient(q: QuotientAlgebra) -> Self {
        EnvPre { presentation: q.presentation().clone(), quotient: RwLock::new(Arc::new(q)) }
    }

    pub fn presentation(&self) -> &PrecomPresentation {
        &self.presentation
    }

    pub fn quotient(&self) -> Arc<QuotientAlgebra> {
        self.quotient.read().expect("quotient lock").clone()
    }

    /// A quotient built to at least `degree`.
    pub fn quotient_to(&self, degree: usize) -> Arc<QuotientAlgebra> {
        let current = self.quotient();
        if current.max_degree() >= degree {
            return current;
        }
        let mut guard = self.quotient.write().expect("quotient lock");
        if guard.max_degree() < degree {
            *guard = Arc::new(guard.extend(degree));
        }
        guard.clone()
    }

    pub fn letter(&self, b: &BasisSymbol) -> Result<EWordPre, EnvError> {
        if self.presentation.basis.contains(b) {
            Ok(EWordPre::letter(b.clone()))
        } else {
            Err(EnvError::UnknownSymbol(b.clone()))
        }
    }

    pub fn is_valid(&self, u: &EWordPre) -> bool {
        let q = self.quotient_to(u.max_monomial_degree());
        is_valid(u, &q).unwrap_or(false)
    }

    fn with_quotient<T>(
        &self,
        degree: usize,
        f: impl Fn(&Star<'_>) -> Result<T, EnvError>,
    ) -> Result<T, EnvError> {
        let mut degree = degree.max(1);
        loop {
            let q = self.quotient_to(degree);
            let ctx = Star { q: &q };
            match f(&ctx) {
                Err(EnvError::Quotient(QuotientError::DegreeOverflow { degree: needed, .. })) if needed > degree => {
                    degree = needed;
                }
                other => return other,
            }
        }
    }

    /// Product of two E-words.
    pub fn star(&self, v: &EWordPre, u: &EWordPre) -> Result<LinComb<EWordPre>, EnvError> {
        self.with_quotient(v.letter_count() + u.letter_count(), |ctx| ctx.star(v, u, None))
    }

    /// Bilinear product.
    pub fn mul(&self, x: &LinComb<EWordPre>, y: &LinComb<EWordPre>) -> Result<LinComb<EWordPre>, EnvError> {
        let letters = |z: &LinComb<EWordPre>| z.keys().map(EWordPre::letter_count).max().unwrap_or(0);
        self.with_quotient(letters(x) + letters(y), |ctx| ctx.star_lc(x, y, None))
    }

    pub fn eval_env(&self, e: &RbExpr) -> Result<LinComb<EWordPre>, EnvError> {
        self.evaluate(e)
    }

    /// Number of E-words by (R-degree, letter count), for `r ≤ max_rdeg`, `1 ≤ d ≤ max_deg`.
    pub fn eword_census(&self, max_rdeg: usize, max_deg: usize) -> Census {
        let q = self.quotient_to(max_deg);
        census_pre(&q.dims()[..max_deg], max_rdeg)
    }

    /// Every E-word with R-degree ≤ `max_rdeg` and at most `max_letters` letters.
    pub fn enumerate(&self, max_rdeg: usize, max_letters: usize) -> Vec<EWordPre> {
        let q = self.quotient_to(max_letters.max(1));
        enumerate_pre(&q, max_rdeg, max_letters).into_iter().flatten().flatten().collect()
    }
}

impl RbAlgebra for EnvPre {
    type Word = EWordPre;
    type Error = EnvError;

    fn generator(&self, s: &BasisSymbol) -> Result<LinComb<EWordPre>, EnvError> {
        Ok(LinComb::basis(self.letter(s)?))
    }

    fn product(&self, x: &LinComb<EWordPre>, y: &LinComb<EWordPre>) -> Result<LinComb<EWordPre>, EnvError> {
        self.mul(x, y)
    }

    fn rb(&self, x: &LinComb<EWordPre>) -> Result<LinComb<EWordPre>, EnvError> {
        Ok(rb_apply(x))
    }
}

/// Word counts indexed by R-degree and letter count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    /// `counts[r][d - 1]`.
    pub counts: Vec<Vec<u128>>,
}

impl Census {
    pub fn row(&self, r: usize) -> &[u128] {
        &self.counts[r]
    }

    pub fn get(&self, r: usize, d: usize) -> u128 {
        self.counts[r][d - 1]
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.counts.iter().enumerate() {
            for (i, c) in row.iter().enumerate() {
                writeln!(f, "{r}, {}, {c}", i + 1)?;
            }
        }
        Ok(())
    }
}

/// Counts from `dim E₀_d` alone: `T(0,d) = e_d` and for `r ≥ 1`
/// `T(r,d) = T(r−1,d) + Σ_k G(r−1,d−k)·e_k`, where `G` counts arguments `x`
/// with `R(x)` good.
pub fn census_pre(e0_dims: &[usize], max_rdeg: usize) -> Census {
    let dmax = e0_dims.len();
    let e = |k: usize| e0_dims[k - 1] as u128;
    let mut total = vec![vec![0u128; dmax + 1]; max_rdeg + 1];
    let mut good = vec![vec![0u128; dmax + 1]; max_rdeg + 1];
    for r in 0..=max_rdeg {
        for d in 1..=dmax {
            let (t, bad) = if r == 0 {
                (e(d), if d == 1 { e(1) } else { 0 })
            } else {
                let mut t = total[r - 1][d];
                for k in 1..d {
                    t += good[r - 1][d - k] * e(k);
                }
                let bad = if d >= 2 { good[r - 1][d - 1] * e(1) } else { 0 };
                (t, bad)
            };
            total[r][d] = t;
            good[r][d] = t - bad;
        }
    }
    Census { counts: total.into_iter().map(|row| row[1..].to_vec()).collect() }
}

/// `out[r][d]` lists the E-words of R-degree `r` with `d` letters.
fn enumerate_pre(q: &QuotientAlgebra, max_rdeg: usize, max_letters: usize) -> Vec<Vec<Vec<EWordPre>>> {
    let mut out: Vec<Vec<Vec<EWordPre>>> = vec![vec![Vec::new(); max_letters + 1]; max_rdeg + 1];
    for d in 1..=max_letters {
        out[0][d] = q.standard(d).iter().cloned().map(EWordPre::Mono).collect();
    }
    for r in 1..=max_rdeg {
        for d in 1..=max_letters {
            let mut words: Vec<EWordPre> = out[r - 1][d].iter().cloned().map(EWordPre::r).collect();
            for k in 1..d {
                for x in out[r - 1][d - k].iter().filter(|x| is_good(x)) {
                    for w in q.standard(k) {
                        words.push(EWordPre::r_mono(x.clone(), w.clone()));
                    }
                }
            }
            out[r][d] = words;
        }
    }
    out
}
