//! Universal enveloping commutative Rota-Baxter algebra of unit weight of a
//! postcommutative algebra `C` with basis `B`.
//!
//! E-words are `b ∈ B`, `R(u)`, and `R(R(x))·a` with `a ∈ B`. The product is
//! defined case by case with the same descending recursion measure as the
//! weight-0 construction. Other nonzero weights reduce to this one by
//! rescaling `R`.

use std::cmp::Ordering;
use std::fmt;

use crate::env_pre::{case_rank, EnvError, Measure};
use crate::expr::{RbAlgebra, RbExpr};
use crate::presentation::PostcomPresentation;
use crate::scalar::{BasisSymbol, LinComb};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EWordPost {
    /// `b ∈ B`.
    Letter(BasisSymbol),
    /// `R(u)`.
    R(Box<EWordPost>),
    /// `R(R(x))·a`, stored as `(x, a)`.
    R2(Box<EWordPost>, BasisSymbol),
}

impl EWordPost {
    pub fn r(u: EWordPost) -> Self {
        EWordPost::R(Box::new(u))
    }

    pub fn r2(x: EWordPost, a: BasisSymbol) -> Self {
        EWordPost::R2(Box::new(x), a)
    }

    pub fn word_type(&self) -> u8 {
        match self {
            EWordPost::Letter(_) => 1,
            EWordPost::R(_) => 2,
            EWordPost::R2(..) => 3,
        }
    }

    pub fn r_degree(&self) -> usize {
        match self {
            EWordPost::Letter(_) => 0,
            EWordPost::R(u) => 1 + u.r_degree(),
            EWordPost::R2(x, _) => 2 + x.r_degree(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            EWordPost::Letter(_) | EWordPost::R(_) => 1,
            EWordPost::R2(..) => 2,
        }
    }

    pub fn letter_count(&self) -> usize {
        match self {
            EWordPost::Letter(_) => 1,
            EWordPost::R(u) => u.letter_count(),
            EWordPost::R2(x, _) => x.letter_count() + 1,
        }
    }

    pub fn to_expr(&self) -> RbExpr {
        match self {
            EWordPost::Letter(b) => RbExpr::symbol(b.clone()),
            EWordPost::R(u) => RbExpr::rb(u.to_expr()),
            EWordPost::R2(x, a) => {
                RbExpr::product([RbExpr::rb(RbExpr::rb(x.to_expr())), RbExpr::symbol(a.clone())])
            }
        }
    }

    fn structural_cmp(&self, other: &Self) -> Ordering {
        use EWordPost::*;
        match (self, other) {
            (Letter(a), Letter(b)) => a.cmp(b),
            (R(a), R(b)) => a.cmp(b),
            (R2(x, a), R2(y, b)) => x.cmp(y).then_with(|| a.cmp(b)),
            _ => self.word_type().cmp(&other.word_type()),
        }
    }
}

impl Ord for EWordPost {
    fn cmp(&self, other: &Self) -> Ordering {
        self.r_degree()
            .cmp(&other.r_degree())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.structural_cmp(other))
    }
}

impl PartialOrd for EWordPost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EWordPost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EWordPost::Letter(b) => write!(f, "{b}"),
            EWordPost::R(u) => write!(f, "R({u})"),
            EWordPost::R2(x, a) => write!(f, "R(R({x})).{a}"),
        }
    }
}

pub fn rb_apply_post(x: &LinComb<EWordPost>) -> LinComb<EWordPost> {
    x.map_keys(|u| EWordPost::r(u.clone()))
}

fn letters(lc: LinComb<BasisSymbol>) -> LinComb<EWordPost> {
    lc.map_keys(|b| EWordPost::Letter(b.clone()))
}

/// Juxtaposes terms `R(R(t))` with letters: `R(R(t))·c`.
fn juxtapose(heads: &LinComb<EWordPost>, cs: &LinComb<BasisSymbol>) -> Result<LinComb<EWordPost>, EnvError> {
    let mut out = LinComb::zero();
    for (h, k) in heads.iter() {
        let EWordPost::R(inner) = h else {
            return Err(EnvError::InvalidWord(format!("expected R(R(x)) shape, got {h}")));
        };
        let EWordPost::R(t) = &**inner else {
            return Err(EnvError::InvalidWord(format!("expected R(R(x)) shape, got {h}")));
        };
        for (c, l) in cs.iter() {
            out.add_term(EWordPost::r2((**t).clone(), c.clone()), k * l);
        }
    }
    Ok(out)
}

/// The enveloping algebra of one postcommutative presentation.
#[derive(Debug, Clone)]
pub struct EnvPost {
    presentation: PostcomPresentation,
}

impl EnvPost {
    pub fn new(presentation: PostcomPresentation) -> Self {
        EnvPost { presentation }
    }

    pub fn presentation(&self) -> &PostcomPresentation {
        &self.presentation
    }

    pub fn letter(&self, b: &BasisSymbol) -> Result<EWordPost, EnvError> {
        if self.presentation.basis.contains(b) {
            Ok(EWordPost::Letter(b.clone()))
        } else {
            Err(EnvError::UnknownSymbol(b.clone()))
        }
    }

    pub fn star(&self, v: &EWordPost, u: &EWordPost) -> Result<LinComb<EWordPost>, EnvError> {
        self.star_in(v, u, None)
    }

    pub fn mul(&self, x: &LinComb<EWordPost>, y: &LinComb<EWordPost>) -> Result<LinComb<EWordPost>, EnvError> {
        self.star_lc(x, y, None)
    }

    pub fn eval_env_post(&self, e: &RbExpr) -> Result<LinComb<EWordPost>, EnvError> {
        self.evaluate(e)
    }

    fn star_lc(
        &self,
        x: &LinComb<EWordPost>,
        y: &LinComb<EWordPost>,
        parent: Option<Measure>,
    ) -> Result<LinComb<EWordPost>, EnvError> {
        crate::scalar::lincomb_apply_bilinear(x, y, |a, b| self.star_in(a, b, parent))
    }

    fn star_in(&self, v: &EWordPost, u: &EWordPost, parent: Option<Measure>) -> Result<LinComb<EWordPost>, EnvError> {
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
        let p = &self.presentation;
        use EWordPost::*;
        match (v, u) {
            (Letter(a), Letter(b)) => Ok(letters(p.perp(a, b))),
            (Letter(a), R(inner)) => match &**inner {
                Letter(b) => Ok(letters(p.succ(b, a))),
                R2(x, b) => {
                    // R(R(x))(b≻a) − R(R(x)*R(b))·a − R(R(x)*b)*a
                    let first = p.succ(b, a).map_keys(|c| EWordPost::r2((**x).clone(), c.clone()));
                    let rx = EWordPost::r((**x).clone());
                    let xb = self.star_in(&rx, &EWordPost::r(Letter(b.clone())), Some(m))?;
                    let second = juxtapose(&rb_apply_post(&xb), &LinComb::basis(a.clone()))?;
                    let xb_plain = self.star_in(&rx, &Letter(b.clone()), Some(m))?;
                    let third = self.star_lc(&rb_apply_post(&xb_plain), &LinComb::basis(v.clone()), Some(m))?;
                    Ok(first - second - third)
                }
                R(s) => Ok(LinComb::basis(EWordPost::r2((**s).clone(), a.clone()))),
            },
            (Letter(a), R2(x, b)) => Ok(p.perp(a, b).map_keys(|c| EWordPost::r2((**x).clone(), c.clone()))),
            (R(ps), R(s)) => {
                let mut inner = self.star_in(v, s, Some(m))?;
                inner += self.star_in(u, ps, Some(m))?;
                inner += self.star_in(s, ps, Some(m))?;
                Ok(rb_apply_post(&inner))
            }
            (R(_), R2(x, a)) => {
                // (R(R(x)) * R(y)) * a
                let rrx = EWordPost::r(EWordPost::r((**x).clone()));
                let head = self.star_in(&rrx, v, Some(m))?;
                self.star_lc(&head, &LinComb::basis(Letter(a.clone())), Some(m))
            }
            (R2(x, a), R2(y, b)) => {
                let rrx = EWordPost::r(EWordPost::r((**x).clone()));
                let rry = EWordPost::r(EWordPost::r((**y).clone()));
                let heads = self.star_in(&rrx, &rry, Some(m))?;
                juxtapose(&heads, &p.perp(a, b))
            }
            _ => unreachable!("pair is ordered by type"),
        }
    }

    /// Counts of E-words by R-degree and letter count, enumerated and
    /// checked to be their own normal form in this presentation.
    pub fn enumerated_census(&self, max_rdeg: usize, max_letters: usize) -> Result<Vec<Vec<u128>>, EnvError> {
        let words = enumerate_post(&self.presentation.basis, max_rdeg, max_letters);
        let mut counts = vec![vec![0u128; max_letters]; max_rdeg + 1];
        for (r, row) in words.iter().enumerate() {
            for (d, ws) in row.iter().enumerate().skip(1) {
                for w in ws {
                    let back = self.eval_env_post(&w.to_expr())?;
                    if back != LinComb::basis(w.clone()) {
                        return Err(EnvError::InvalidWord(format!("{w} evaluates to {back}")));
                    }
                }
                counts[r][d - 1] = ws.len() as u128;
            }
        }
        Ok(counts)
    }

    pub fn enumerate(&self, max_rdeg: usize, max_letters: usize) -> Vec<EWordPost> {
        enumerate_post(&self.presentation.basis, max_rdeg, max_letters).into_iter().flatten().flatten().collect()
    }
}

impl RbAlgebra for EnvPost {
    type Word = EWordPost;
    type Error = EnvError;

    fn generator(&self, s: &BasisSymbol) -> Result<LinComb<EWordPost>, EnvError> {
        Ok(LinComb::basis(self.letter(s)?))
    }

    fn product(&self, x: &LinComb<EWordPost>, y: &LinComb<EWordPost>) -> Result<LinComb<EWordPost>, EnvError> {
        self.mul(x, y)
    }

    fn rb(&self, x: &LinComb<EWordPost>) -> Result<LinComb<EWordPost>, EnvError> {
        Ok(rb_apply_post(x))
    }
}

/// Whether every type-3 subword has the `R(R(x))·a` shape and uses basis letters.
pub fn is_valid_post(u: &EWordPost, basis: &[BasisSymbol]) -> bool {
    match u {
        EWordPost::Letter(b) => basis.contains(b),
        EWordPost::R(x) => is_valid_post(x, basis),
        EWordPost::R2(x, a) => basis.contains(a) && is_valid_post(x, basis),
    }
}

/// `T(r,d) = [r=0, d=1]·n + T(r−1,d) + T(r−2,d−1)·n`, indexed `[r][d − 1]`.
pub fn eword_census_post(n: usize, max_rdeg: usize, max_deg: usize) -> crate::env_pre::Census {
    let n = n as u128;
    let mut t = vec![vec![0u128; max_deg + 1]; max_rdeg + 1];
    for r in 0..=max_rdeg {
        for d in 1..=max_deg {
            let mut c = if r == 0 && d == 1 { n } else { 0 };
            if r >= 1 {
                c += t[r - 1][d];
            }
            if r >= 2 {
                c += t[r - 2][d - 1] * n;
            }
            t[r][d] = c;
        }
    }
    crate::env_pre::Census { counts: t.into_iter().map(|row| row[1..].to_vec()).collect() }
}

/// `out[r][d]` lists the E-words of R-degree `r` with `d` letters.
fn enumerate_post(basis: &[BasisSymbol], max_rdeg: usize, max_letters: usize) -> Vec<Vec<Vec<EWordPost>>> {
    let mut out: Vec<Vec<Vec<EWordPost>>> = vec![vec![Vec::new(); max_letters + 1]; max_rdeg + 1];
    if max_letters >= 1 {
        out[0][1] = basis.iter().cloned().map(EWordPost::Letter).collect();
    }
    for r in 1..=max_rdeg {
        for d in 1..=max_letters {
            let mut words: Vec<EWordPost> = out[r - 1][d].iter().cloned().map(EWordPost::r).collect();
            if r >= 2 && d >= 2 {
                for x in &out[r - 2][d - 1] {
                    for a in basis {
                        words.push(EWordPost::r2(x.clone(), a.clone()));
                    }
                }
            }
            out[r][d] = words;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;
    use crate::scalar::rat;

    fn e() -> EWordPost {
        EWordPost::Letter(BasisSymbol::new("e"))
    }

    fn r(u: EWordPost) -> EWordPost {
        EWordPost::r(u)
    }

    fn line() -> EnvPost {
        EnvPost::new(PostcomPresentation::idempotent_line())
    }

    #[test]
    fn idempotent_line_products() {
        let env = line();
        assert_eq!(env.star(&e(), &e()).unwrap(), LinComb::basis(e()));
        assert!(env.star(&r(e()), &e()).unwrap().is_zero());
        assert_eq!(env.star(&r(e()), &r(e())).unwrap(), LinComb::basis(r(e())));
    }

    #[test]
    fn two_three_follows_associativity() {
        // R(R(e))·e * R(e) = R(R(e)) * (e * R(e)) = 0 since e≻e = 0
        let env = line();
        let v = EWordPost::r2(e(), BasisSymbol::new("e"));
        assert!(env.star(&v, &r(e())).unwrap().is_zero());
    }

    #[test]
    fn rb_apply_examples() {
        assert_eq!(rb_apply_post(&LinComb::basis(e())), LinComb::basis(r(e())));
        assert_eq!(rb_apply_post(&LinComb::basis(r(e()))), LinComb::basis(r(r(e()))));
        let x = LinComb::term(r(e()), rat(3)) - LinComb::basis(e());
        assert_eq!(rb_apply_post(&x), LinComb::term(r(r(e())), rat(3)) - LinComb::basis(r(e())));
    }

    #[test]
    fn eval_examples() {
        let env = line();
        assert!(env.eval_env_post(&parse_expr("R(e)*e").unwrap()).unwrap().is_zero());
        assert_eq!(env.eval_env_post(&parse_expr("e*e*e").unwrap()).unwrap(), LinComb::basis(e()));
        let w = env.eval_env_post(&parse_expr("R(R(e))*e").unwrap()).unwrap();
        assert_eq!(w, LinComb::basis(EWordPost::r2(e(), BasisSymbol::new("e"))));
        assert_eq!(w.to_string(), "R(R(e)).e");
    }

    #[test]
    fn weight_one_identity_on_letters() {
        let env = line();
        let x = LinComb::basis(e());
        let rx = rb_apply_post(&x);
        let lhs = env.mul(&rx, &rx).unwrap();
        let inner = env.mul(&rx, &x).unwrap() + env.mul(&x, &rx).unwrap() + env.mul(&x, &x).unwrap();
        assert_eq!(lhs, rb_apply_post(&inner));
        assert_eq!(lhs, LinComb::basis(r(e())));
    }

    #[test]
    fn census_small_cases() {
        let c = eword_census_post(1, 2, 3);
        assert_eq!(c.get(0, 1), 1);
        assert_eq!(c.get(1, 1), 1);
        assert_eq!(c.row(1).iter().sum::<u128>(), 1);
        assert_eq!(c.get(2, 2), 1);
    }

    #[test]
    fn census_matches_enumeration() {
        for env in [EnvPost::new(PostcomPresentation::partial_sums_plane()), EnvPost::new(PostcomPresentation::split_plane())] {
            let counts = env.enumerated_census(3, 4).unwrap();
            assert_eq!(counts, eword_census_post(2, 3, 4).counts);
        }
    }
}
