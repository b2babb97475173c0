//! Seeded randomized and exhaustive checks of the algebraic identities.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`) seeded with the user seed.
//! Each check draws its own 64-bit sub-seed from a master generator in a fixed
//! order, so a report depends only on the suite, the trial count and the seed.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::env_post::{eword_census_post, is_valid_post, rb_apply_post, EWordPost, EnvPost};
use crate::env_pre::{census_pre, rb_apply, EWordPre, EnvPre};
use crate::expr::{parse_expr, Factor, RbExpr, Term};
use crate::free::{FreeRb, NestedWord};
use crate::presentation::{truncated_free_zinbiel, PostcomPresentation, PrecomPresentation, Presentation};
use crate::quotient::QuotientAlgebra;
use crate::scalar::{rat, ratio, BasisSymbol, LinComb, Monomial, Rational, TensorWord};
use crate::shuffle::{half_shuffle, quasi_shuffle, shuffle};
use crate::ybe;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Shuffle,
    FreeRb,
    Quotient,
    EnvPre,
    EnvPost,
    Ybe,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Shuffle, Suite::FreeRb, Suite::Quotient, Suite::EnvPre, Suite::EnvPost, Suite::Ybe];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Shuffle => "shuffle",
            Suite::FreeRb => "free-rb",
            Suite::Quotient => "quotient",
            Suite::EnvPre => "env-pre",
            Suite::EnvPost => "env-post",
            Suite::Ybe => "ybe",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite `{0}` (expected shuffle, free-rb, quotient, env-pre, env-post, ybe or all)")]
    UnknownSuite(String),
    #[error("suite {suite} needs a {expected} presentation")]
    WrongPresentation { suite: Suite, expected: &'static str },
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    /// Replaces the builtin presentations of the matching kind.
    pub presentation: Option<Presentation>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 100, seed: 0, presentation: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub trials: usize,
    pub failures: usize,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} trials)", self.name, self.trials)
        } else {
            write!(f, "FAIL {} ({} trials, {} failures)", self.name, self.trials, self.failures)?;
            if let Some(c) = &self.counterexample {
                write!(f, "; first counterexample: {c}")?;
            }
            Ok(())
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify suite={} seed={} trials={}", self.suite, self.seed, self.trials)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "result: {} passed, {} failed", self.checks.len() - self.failed(), self.failed())
    }
}

type Outcome = Result<(), String>;

type BinOp<'a, W> = dyn Fn(&LinComb<W>, &LinComb<W>) -> Result<LinComb<W>, String> + 'a;

struct Runner {
    master: ChaCha8Rng,
    trials: usize,
    checks: Vec<CheckResult>,
}

impl Runner {
    fn new(seed: u64, trials: usize) -> Self {
        Runner { master: ChaCha8Rng::seed_from_u64(seed), trials, checks: Vec::new() }
    }

    /// Runs `f` once per trial with a generator private to this check.
    fn random(&mut self, name: impl Into<String>, mut f: impl FnMut(&mut ChaCha8Rng) -> Outcome) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master.gen());
        let trials = self.trials;
        self.record(name.into(), trials, (0..trials).map(|_| f(&mut rng)));
    }

    /// Runs `f` on every item.
    fn exhaustive<T>(&mut self, name: impl Into<String>, items: &[T], f: impl Fn(&T) -> Outcome) {
        self.record(name.into(), items.len(), items.iter().map(f));
    }

    fn single(&mut self, name: impl Into<String>, outcome: Outcome) {
        self.record(name.into(), 1, std::iter::once(outcome));
    }

    fn record(&mut self, name: String, trials: usize, outcomes: impl Iterator<Item = Outcome>) {
        let mut failures = 0;
        let mut counterexample = None;
        for o in outcomes {
            if let Err(w) = o {
                failures += 1;
                counterexample.get_or_insert(w);
            }
        }
        self.checks.push(CheckResult { name, trials, failures, counterexample });
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(left: &T, right: &T, context: impl FnOnce() -> String) -> Outcome {
    if left == right {
        Ok(())
    } else {
        Err(format!("{}: {left} != {right}", context()))
    }
}

fn err_str<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn nonzero_coeff(rng: &mut ChaCha8Rng) -> Rational {
    let c = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        rat(c)
    } else {
        rat(-c)
    }
}

/// One or two words from `pool` with small nonzero coefficients.
fn random_comb<W: Ord + Clone>(rng: &mut ChaCha8Rng, pool: &[W]) -> LinComb<W> {
    let mut out = LinComb::zero();
    let terms = if rng.gen_bool(0.5) { 1 } else { 2 };
    for _ in 0..terms {
        out.add_term(pool.choose(rng).expect("nonempty pool").clone(), nonzero_coeff(rng));
    }
    if out.is_zero() {
        out = LinComb::basis(pool[0].clone());
    }
    out
}

fn random_word<W: Ord + Clone>(rng: &mut ChaCha8Rng, pool: &[W]) -> LinComb<W> {
    LinComb::basis(pool.choose(rng).expect("nonempty pool").clone())
}

/// Random expression tree over `symbols` with R-nesting at most `depth`.
pub fn random_expr(rng: &mut ChaCha8Rng, symbols: &[BasisSymbol], depth: usize) -> RbExpr {
    let terms = (0..rng.gen_range(1..=3))
        .map(|_| {
            let coeff = ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            let factors = (0..rng.gen_range(1..=3))
                .map(|_| match (depth, rng.gen_range(0..4)) {
                    (0, _) | (_, 0 | 1) => Factor::Symbol(symbols.choose(rng).expect("symbols").clone()),
                    (_, 2) => Factor::R(random_expr(rng, symbols, depth - 1)),
                    _ => Factor::Group(random_expr(rng, symbols, depth - 1)),
                })
                .collect();
            Term { coeff, factors }
        })
        .collect();
    RbExpr { terms }
}

fn symbols(names: &[&str]) -> Vec<BasisSymbol> {
    names.iter().map(|s| BasisSymbol::new(*s)).collect()
}

fn random_tensor(rng: &mut ChaCha8Rng, letters: &[BasisSymbol]) -> TensorWord {
    let n = rng.gen_range(1..=3);
    TensorWord::new((0..n).map(|_| letters.choose(rng).expect("letters").clone()).collect()).expect("nonempty")
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn shuffle_checks(run: &mut Runner) {
    let abc = symbols(&["a", "b", "c"]);
    let bilinear = |x: &LinComb<TensorWord>, y: &LinComb<TensorWord>, f: &dyn Fn(&TensorWord, &TensorWord) -> LinComb<TensorWord>| {
        crate::shuffle::extend_bilinear(x, y, f)
    };
    run.random("shuffle: commutativity", |rng| {
        let (a, b) = (random_tensor(rng, &abc), random_tensor(rng, &abc));
        expect_eq(&shuffle(&a, &b), &shuffle(&b, &a), || format!("{a} ⋄ {b}"))
    });
    run.random("shuffle: associativity", |rng| {
        let (a, b, c) = (random_tensor(rng, &abc), random_tensor(rng, &abc), random_tensor(rng, &abc));
        let left = bilinear(&shuffle(&a, &b), &LinComb::basis(c.clone()), &shuffle);
        let right = bilinear(&LinComb::basis(a.clone()), &shuffle(&b, &c), &shuffle);
        expect_eq(&left, &right, || format!("({a} ⋄ {b}) ⋄ {c}"))
    });
    run.random("shuffle: total multiplicity is a binomial coefficient", |rng| {
        let (a, b) = (random_tensor(rng, &abc), random_tensor(rng, &abc));
        let mass = shuffle(&a, &b).mass();
        let expected = rat(binomial(a.len() + b.len(), a.len()) as i64);
        expect_eq(&mass, &expected, || format!("{a} ⋄ {b}"))
    });
    // letters a1, a2, a3 multiply as a_i a_j = a_{i+j}
    let graded: Vec<BasisSymbol> = (1..=3).map(|i| BasisSymbol::indexed("a", i)).collect();
    let merge = |x: &BasisSymbol, y: &BasisSymbol| {
        LinComb::basis(BasisSymbol::indexed("a", x.index().unwrap_or(0) + y.index().unwrap_or(0)))
    };
    let qs = |x: &TensorWord, y: &TensorWord| quasi_shuffle(x, y, &rat(1), merge);
    run.random("quasi-shuffle (weight 1): commutativity", |rng| {
        let (a, b) = (random_tensor(rng, &graded), random_tensor(rng, &graded));
        expect_eq(&qs(&a, &b), &qs(&b, &a), || format!("{a} * {b}"))
    });
    run.random("quasi-shuffle (weight 1): associativity", |rng| {
        let (a, b, c) = (random_tensor(rng, &graded), random_tensor(rng, &graded), random_tensor(rng, &graded));
        let left = bilinear(&qs(&a, &b), &LinComb::basis(c.clone()), &qs);
        let right = bilinear(&LinComb::basis(a.clone()), &qs(&b, &c), &qs);
        expect_eq(&left, &right, || format!("({a} * {b}) * {c}"))
    });
    run.random("half-shuffle: x≻y + y≻x = x⋄y", |rng| {
        let (a, b) = (random_tensor(rng, &abc), random_tensor(rng, &abc));
        expect_eq(&(half_shuffle(&a, &b) + half_shuffle(&b, &a)), &shuffle(&a, &b), || format!("{a}, {b}"))
    });
    run.random("half-shuffle: Zinbiel identity", |rng| {
        let (a, b, c) = (random_tensor(rng, &abc), random_tensor(rng, &abc), random_tensor(rng, &abc));
        let s = half_shuffle(&a, &b) + half_shuffle(&b, &a);
        let left = bilinear(&s, &LinComb::basis(c.clone()), &half_shuffle);
        let right = bilinear(&LinComb::basis(a.clone()), &half_shuffle(&b, &c), &half_shuffle);
        expect_eq(&left, &right, || format!("({a}, {b}, {c})"))
    });
}

/// Standard words with R-degree ≤ 2 and degree ≤ 3 whose letters have degree ≤ 2.
pub fn free_word_pool(alphabet: &[BasisSymbol]) -> Vec<NestedWord> {
    let monos = |lo: usize, hi: usize| -> Vec<Monomial> {
        (lo..=hi).flat_map(|d| Monomial::all_of_degree(alphabet, d)).collect()
    };
    let mut pool: Vec<NestedWord> = monos(1, 3).into_iter().map(NestedWord::monomial).collect();
    let heads: Vec<Option<Monomial>> = std::iter::once(None).chain(monos(1, 2).into_iter().map(Some)).collect();
    let inner: Vec<Option<Monomial>> = heads.clone();
    let last: Vec<Option<Monomial>> = monos(1, 2).into_iter().map(Some).collect();
    for h in &heads {
        for l in &last {
            pool.push(NestedWord::new(h.clone(), vec![l.clone()]).expect("valid word"));
            for i in &inner {
                pool.push(NestedWord::new(h.clone(), vec![i.clone(), l.clone()]).expect("valid word"));
            }
        }
    }
    pool
}

/// `(x≻y + y≻x)≻z − x≻(y≻z)` is zero.
fn zinbiel_outcome<W: Ord + Clone + fmt::Display>(
    succ: &BinOp<'_, W>,
    x: &LinComb<W>,
    y: &LinComb<W>,
    z: &LinComb<W>,
) -> Outcome {
    let s = succ(x, y)? + succ(y, x)?;
    let left = succ(&s, z)?;
    let right = succ(x, &succ(y, z)?)?;
    expect_eq(&left, &right, || format!("x = {x}, y = {y}, z = {z}"))
}

/// The three postcommutative identities plus commutativity and
/// associativity of `⊥`.
fn postcom_outcome<W: Ord + Clone + fmt::Display>(
    succ: &BinOp<'_, W>,
    perp: &BinOp<'_, W>,
    x: &LinComb<W>,
    y: &LinComb<W>,
    z: &LinComb<W>,
) -> Outcome {
    let ctx = |id: &str| format!("{id} at x = {x}, y = {y}, z = {z}");
    let xy = succ(x, y)?;
    let s = xy.clone() + succ(y, x)? + perp(x, y)?;
    expect_eq(&succ(&s, z)?, &succ(x, &succ(y, z)?)?, || ctx("(x≻y + y≻x + x⊥y)≻z = x≻(y≻z)"))?;
    expect_eq(&succ(x, &perp(y, z)?)?, &perp(&xy, z)?, || ctx("x≻(y⊥z) = (x≻y)⊥z"))?;
    expect_eq(&perp(&xy, z)?, &perp(y, &succ(x, z)?)?, || ctx("(x≻y)⊥z = y⊥(x≻z)"))?;
    expect_eq(&perp(x, y)?, &perp(y, x)?, || ctx("x⊥y = y⊥x"))?;
    expect_eq(&perp(&perp(x, y)?, z)?, &perp(x, &perp(y, z)?)?, || ctx("(x⊥y)⊥z = x⊥(y⊥z)"))
}

fn free_rb_checks(run: &mut Runner) {
    let alphabet = symbols(&["x", "y", "z"]);
    let pool = free_word_pool(&alphabet);
    for weight in [0i64, 1] {
        let alg = FreeRb::new(alphabet.clone(), rat(weight));
        let tag = format!("free-rb[weight {weight}]");
        run.random(format!("{tag}: commutativity"), |rng| {
            let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
            expect_eq(&alg.mul(&x, &y), &alg.mul(&y, &x), || format!("x = {x}, y = {y}"))
        });
        run.random(format!("{tag}: associativity"), |rng| {
            let (x, y, z) = (random_word(rng, &pool), random_word(rng, &pool), random_word(rng, &pool));
            let left = alg.mul(&alg.mul(&x, &y), &z);
            let right = alg.mul(&x, &alg.mul(&y, &z));
            expect_eq(&left, &right, || format!("x = {x}, y = {y}, z = {z}"))
        });
        run.random(format!("{tag}: R(x)R(y) = R(R(x)y + xR(y) + λxy)"), |rng| {
            let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
            let (rx, ry) = (alg.r(&x), alg.r(&y));
            let left = alg.mul(&rx, &ry);
            let mut inner = alg.mul(&rx, &y) + alg.mul(&x, &ry);
            inner.add_scaled(&alg.mul(&x, &y), alg.weight());
            expect_eq(&left, &alg.r(&inner), || format!("x = {x}, y = {y}"))
        });
        let succ = |x: &LinComb<NestedWord>, y: &LinComb<NestedWord>| Ok(alg.mul(&alg.r(x), y));
        if weight == 0 {
            run.random(format!("{tag}: x≻y = R(x)y is Zinbiel"), |rng| {
                let (x, y, z) = (random_word(rng, &pool), random_word(rng, &pool), random_word(rng, &pool));
                zinbiel_outcome(&succ, &x, &y, &z)
            });
        } else {
            let perp = |x: &LinComb<NestedWord>, y: &LinComb<NestedWord>| Ok(alg.mul(x, y));
            run.random(format!("{tag}: (R(x)y, xy) is postcommutative"), |rng| {
                let (x, y, z) = (random_word(rng, &pool), random_word(rng, &pool), random_word(rng, &pool));
                postcom_outcome(&succ, &perp, &x, &y, &z)
            });
        }
        run.random(format!("{tag}: printed words evaluate to themselves"), |rng| {
            let w = pool.choose(rng).expect("pool").clone();
            let back = parse_expr(&w.to_string()).map_err(err_str)?;
            let v = alg.eval_free(&back).map_err(err_str)?;
            expect_eq(&v, &LinComb::basis(w.clone()), || w.to_string())
        });
    }
    run.random("expressions: parse(print(e)) = e", |rng| {
        let e = random_expr(rng, &alphabet, 2);
        let text = e.to_string();
        match parse_expr(&text) {
            Ok(back) if back == e => Ok(()),
            Ok(back) => Err(format!("{text} reparsed as {back}")),
            Err(err) => Err(format!("{text}: {err}")),
        }
    });
}

fn builtin_pre() -> Vec<(String, PrecomPresentation)> {
    vec![
        ("nilpotent-plane".into(), PrecomPresentation::two_dim_nilpotent()),
        ("trivial-plane".into(), PrecomPresentation::trivial(&["a", "b"])),
        ("free-zinbiel-x-3".into(), truncated_free_zinbiel(&[BasisSymbol::new("x")], 3)),
    ]
}

fn builtin_post() -> Vec<(String, PostcomPresentation)> {
    vec![
        ("idempotent-line".into(), PostcomPresentation::idempotent_line()),
        ("zero-line".into(), PostcomPresentation::trivial(&["e"])),
        ("partial-sums-plane".into(), PostcomPresentation::partial_sums_plane()),
        ("split-plane".into(), PostcomPresentation::split_plane()),
    ]
}

const QUOTIENT_DEGREE: usize = 5;

fn quotient_checks(run: &mut Runner, label: &str, p: &PrecomPresentation) {
    let q = QuotientAlgebra::build(p, QUOTIENT_DEGREE + 1);
    let tag = format!("quotient[{label}]");
    let standard: Vec<Monomial> = (1..=QUOTIENT_DEGREE).flat_map(|d| q.standard(d).to_vec()).collect();
    run.exhaustive(format!("{tag}: divisors of standard monomials are standard"), &standard, |m| {
        for (u, v) in m.factorizations() {
            for part in [u, v] {
                if !q.is_standard(&part).map_err(err_str)? {
                    return Err(format!("{part} divides {m}"));
                }
            }
        }
        Ok(())
    });
    let all: Vec<Monomial> =
        (1..=QUOTIENT_DEGREE).flat_map(|d| Monomial::all_of_degree(&p.basis, d)).collect();
    run.exhaustive(format!("{tag}: reduce is idempotent with standard support"), &all, |m| {
        let r = q.reduce(&LinComb::basis(m.clone())).map_err(err_str)?;
        for k in r.keys() {
            if !q.is_standard(k).map_err(err_str)? {
                return Err(format!("{m} reduces to {r} with nonstandard {k}"));
            }
        }
        expect_eq(&q.reduce(&r).map_err(err_str)?, &r, || m.to_string())
    });
    run.exhaustive(format!("{tag}: ideal generators reduce to 0"), q.generators(), |g| {
        expect_eq(&q.reduce(g).map_err(err_str)?, &LinComb::zero(), || g.to_string())
    });
    let small: Vec<Monomial> = (1..=2).flat_map(|d| q.standard(d).to_vec()).collect();
    run.random(format!("{tag}: multiplication is associative"), |rng| {
        let pick = |rng: &mut ChaCha8Rng| LinComb::basis(small.choose(rng).expect("standard").clone());
        let (x, y, z) = (pick(rng), pick(rng), pick(rng));
        let left = q.multiply(&q.multiply(&x, &y).map_err(err_str)?, &z).map_err(err_str)?;
        let right = q.multiply(&x, &q.multiply(&y, &z).map_err(err_str)?).map_err(err_str)?;
        expect_eq(&left, &right, || format!("({x})({y})({z})"))
    });
}

fn lc_expr(lc: &LinComb<BasisSymbol>) -> RbExpr {
    RbExpr::sum(lc.iter().map(|(b, c)| (c.clone(), RbExpr::symbol(b.clone()))))
}

fn mono_expr(m: &Monomial) -> RbExpr {
    RbExpr::product(m.factors().iter().cloned().map(RbExpr::symbol))
}

fn product_with(parts: Vec<RbExpr>, tail: Option<&Monomial>) -> RbExpr {
    let mut parts = parts;
    parts.extend(tail.map(mono_expr));
    RbExpr::product(parts)
}

fn env_pre_checks(run: &mut Runner, label: &str, p: &PrecomPresentation) {
    let env = EnvPre::new(p.clone());
    let tag = format!("env-pre[{label}]");
    let pool = env.enumerate(2, 3);
    let q = env.quotient_to(6);
    let valid = |out: LinComb<EWordPre>| -> Result<LinComb<EWordPre>, String> {
        if let Some(w) = out.keys().find(|w| !env.is_valid(w)) {
            return Err(format!("invalid E-word {w}"));
        }
        Ok(out)
    };
    let mul = |x: &LinComb<EWordPre>, y: &LinComb<EWordPre>| valid(env.mul(x, y).map_err(err_str)?);
    let basis = p.basis.clone();
    let pairs: Vec<(BasisSymbol, BasisSymbol)> =
        basis.iter().flat_map(|b| basis.iter().map(move |a| (b.clone(), a.clone()))).collect();
    run.exhaustive(format!("{tag}: R(b)*a = b≻a"), &pairs, |(b, a)| {
        let out = env.star(&EWordPre::r(EWordPre::letter(b.clone())), &EWordPre::letter(a.clone())).map_err(err_str)?;
        let expected = p.succ(b, a).map_keys(|c| EWordPre::letter(c.clone()));
        expect_eq(&out, &expected, || format!("b = {b}, a = {a}"))
    });
    run.random(format!("{tag}: closure"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        mul(&x, &y).map(|_| ())
    });
    run.random(format!("{tag}: commutativity"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        expect_eq(&mul(&x, &y)?, &mul(&y, &x)?, || format!("x = {x}, y = {y}"))
    });
    run.random(format!("{tag}: associativity"), |rng| {
        let (x, y, z) = (random_comb(rng, &pool), random_comb(rng, &pool), random_comb(rng, &pool));
        let left = mul(&mul(&x, &y)?, &z)?;
        let right = mul(&x, &mul(&y, &z)?)?;
        expect_eq(&left, &right, || format!("x = {x}, y = {y}, z = {z}"))
    });
    run.random(format!("{tag}: R(x)R(y) = R(R(x)y + xR(y))"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        let (rx, ry) = (rb_apply(&x), rb_apply(&y));
        let right = rb_apply(&(mul(&rx, &y)? + mul(&x, &ry)?));
        expect_eq(&mul(&rx, &ry)?, &right, || format!("x = {x}, y = {y}"))
    });
    let succ = |x: &LinComb<EWordPre>, y: &LinComb<EWordPre>| mul(&rb_apply(x), y);
    run.random(format!("{tag}: x≻y = R(x)*y is Zinbiel"), |rng| {
        let (x, y, z) = (random_comb(rng, &pool), random_comb(rng, &pool), random_comb(rng, &pool));
        zinbiel_outcome(&succ, &x, &y, &z)
    });
    let eval = |e: &RbExpr| env.eval_env(e).map_err(err_str);
    let standard: Vec<Monomial> = (1..=3).flat_map(|d| q.standard(d).to_vec()).collect();
    let short: Vec<Monomial> = (1..=2).flat_map(|d| q.standard(d).to_vec()).collect();
    run.random(format!("{tag}: R(a)·bu' = u'·(a≻b)"), |rng| {
        let a = basis.choose(rng).expect("basis").clone();
        let u = standard.choose(rng).expect("standard").clone();
        let (b, rest) = u.split_first();
        let left = eval(&RbExpr::product([RbExpr::rb(RbExpr::symbol(a.clone())), mono_expr(&u)]))?;
        let right = eval(&product_with(vec![lc_expr(&p.succ(&a, &b))], rest.as_ref()))?;
        expect_eq(&left, &right, || format!("a = {a}, u = {u}"))
    });
    run.random(format!("{tag}: R(a)·R(t)u' = R(R(a)t)u' + R(aR(t))u'"), |rng| {
        let a = RbExpr::symbol(basis.choose(rng).expect("basis").clone());
        let t = pool.choose(rng).expect("pool").to_expr();
        let tail = if rng.gen_bool(0.3) { None } else { short.choose(rng).cloned() };
        let u = product_with(vec![RbExpr::rb(t.clone())], tail.as_ref());
        let left = eval(&RbExpr::product([RbExpr::rb(a.clone()), u.clone()]))?;
        let r1 = product_with(vec![RbExpr::rb(RbExpr::product([RbExpr::rb(a.clone()), t.clone()]))], tail.as_ref());
        let r2 = product_with(vec![RbExpr::rb(RbExpr::product([a.clone(), RbExpr::rb(t.clone())]))], tail.as_ref());
        let right = eval(&r1)? + eval(&r2)?;
        expect_eq(&left, &right, || format!("a = {a}, u = {u}"))
    });
    run.random(format!("{tag}: R(R(u)b)a = R(u)(b≻a) − R(R(b)u)a"), |rng| {
        let a = basis.choose(rng).expect("basis").clone();
        let b = basis.choose(rng).expect("basis").clone();
        let u = pool.choose(rng).expect("pool").to_expr();
        let (ae, be) = (RbExpr::symbol(a.clone()), RbExpr::symbol(b.clone()));
        let left = eval(&RbExpr::product([RbExpr::rb(RbExpr::product([RbExpr::rb(u.clone()), be.clone()])), ae.clone()]))?;
        let r1 = eval(&RbExpr::product([RbExpr::rb(u.clone()), lc_expr(&p.succ(&b, &a))]))?;
        let r2 = eval(&RbExpr::product([RbExpr::rb(RbExpr::product([RbExpr::rb(be), u.clone()])), ae]))?;
        expect_eq(&left, &(r1 - r2), || format!("a = {a}, b = {b}, u = {u}"))
    });
    let census = census_pre(&q.dims()[..4], 2);
    let cells: Vec<(usize, usize)> = (0..=2).flat_map(|r| (1..=4).map(move |d| (r, d))).collect();
    let all = env.enumerate(2, 4);
    run.exhaustive(format!("{tag}: census counts match enumeration"), &cells, |&(r, d)| {
        let n = all.iter().filter(|w| w.r_degree() == r && w.letter_count() == d).count() as u128;
        expect_eq(&census.get(r, d), &n, || format!("r = {r}, d = {d}"))
    });
}

fn env_post_checks(run: &mut Runner, label: &str, p: &PostcomPresentation) {
    let env = EnvPost::new(p.clone());
    let tag = format!("env-post[{label}]");
    let pool = env.enumerate(2, 3);
    let basis = p.basis.clone();
    let valid = |out: LinComb<EWordPost>| -> Result<LinComb<EWordPost>, String> {
        if let Some(w) = out.keys().find(|w| !is_valid_post(w, &basis)) {
            return Err(format!("invalid E-word {w}"));
        }
        Ok(out)
    };
    let mul = |x: &LinComb<EWordPost>, y: &LinComb<EWordPost>| valid(env.mul(x, y).map_err(err_str)?);
    let pairs: Vec<(BasisSymbol, BasisSymbol)> =
        basis.iter().flat_map(|b| basis.iter().map(move |a| (b.clone(), a.clone()))).collect();
    let letter = |b: &BasisSymbol| EWordPost::Letter(b.clone());
    let letters = |lc: LinComb<BasisSymbol>| lc.map_keys(|c| EWordPost::Letter(c.clone()));
    run.exhaustive(format!("{tag}: R(b)*a = b≻a and a*b = a⊥b"), &pairs, |(b, a)| {
        let s = env.star(&EWordPost::r(letter(b)), &letter(a)).map_err(err_str)?;
        expect_eq(&s, &letters(p.succ(b, a)), || format!("R({b})*{a}"))?;
        let t = env.star(&letter(a), &letter(b)).map_err(err_str)?;
        expect_eq(&t, &letters(p.perp(a, b)), || format!("{a}*{b}"))
    });
    run.random(format!("{tag}: closure"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        mul(&x, &y).map(|_| ())
    });
    run.random(format!("{tag}: commutativity"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        expect_eq(&mul(&x, &y)?, &mul(&y, &x)?, || format!("x = {x}, y = {y}"))
    });
    run.random(format!("{tag}: associativity"), |rng| {
        let (x, y, z) = (random_comb(rng, &pool), random_comb(rng, &pool), random_comb(rng, &pool));
        let left = mul(&mul(&x, &y)?, &z)?;
        let right = mul(&x, &mul(&y, &z)?)?;
        expect_eq(&left, &right, || format!("x = {x}, y = {y}, z = {z}"))
    });
    run.random(format!("{tag}: R(x)R(y) = R(R(x)y + xR(y) + xy)"), |rng| {
        let (x, y) = (random_comb(rng, &pool), random_comb(rng, &pool));
        let (rx, ry) = (rb_apply_post(&x), rb_apply_post(&y));
        let right = rb_apply_post(&(mul(&rx, &y)? + mul(&x, &ry)? + mul(&x, &y)?));
        expect_eq(&mul(&rx, &ry)?, &right, || format!("x = {x}, y = {y}"))
    });
    let succ = |x: &LinComb<EWordPost>, y: &LinComb<EWordPost>| mul(&rb_apply_post(x), y);
    run.random(format!("{tag}: (R(x)*y, x*y) is postcommutative"), |rng| {
        let (x, y, z) = (random_comb(rng, &pool), random_comb(rng, &pool), random_comb(rng, &pool));
        postcom_outcome(&succ, &mul, &x, &y, &z)
    });
    run.single(
        format!("{tag}: enumerated census equals the dimension-only count"),
        env.enumerated_census(2, 4).map_err(err_str).and_then(|counts| {
            let expected = eword_census_post(basis.len(), 2, 4);
            if counts == expected.counts {
                Ok(())
            } else {
                Err(format!("{counts:?} != {:?}", expected.counts))
            }
        }),
    );
}

fn random_operator(rng: &mut ChaCha8Rng, n: usize) -> ybe::LinearOperator {
    ybe::LinearOperator::new((0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-2..=2))).collect()).collect())
}

fn ybe_checks(run: &mut Runner) {
    let sizes: Vec<usize> = (2..=6).collect();
    run.exhaustive("ybe: partial sums on k^n are Rota-Baxter of weight -1 (n = 2..6)", &sizes, |&n| {
        let (a, r) = ybe::partial_sums(n);
        match ybe::check_rb(&a, &r, &rat(-1)).map_err(err_str)?.first() {
            None => Ok(()),
            Some(v) => Err(format!("n = {n}: {v}")),
        }
    });
    let g = ybe::sl2();
    let r = ybe::sl2_cybe_solution();
    run.single("ybe: e⊗h − h⊗e solves CYBE on sl2", match ybe::check_cybe(&g, &r) {
        Ok(true) => Ok(()),
        Ok(false) => Err("bracket sum is nonzero".into()),
        Err(e) => Err(e.to_string()),
    });
    let reference = ybe::sl2_reference_operator();
    run.single(
        "ybe: R(e)=0, R(f)=4h, R(h)=-8e is Rota-Baxter of weight 0 on sl2",
        match ybe::check_rb(&g, &reference, &rat(0)) {
            Ok(v) if v.is_empty() => Ok(()),
            Ok(v) => Err(v[0].to_string()),
            Err(e) => Err(e.to_string()),
        },
    );
    run.single(
        "ybe: Killing-form operator of e⊗h − h⊗e is a multiple of the reference operator",
        ybe::cybe_to_rb(&g, &r).map_err(err_str).and_then(|op| {
            let scalar = op.proportionality(&reference).ok_or_else(|| "not proportional".to_string())?;
            match ybe::check_rb(&g, &op, &rat(0)).map_err(err_str)?.first() {
                Some(v) => Err(v.to_string()),
                None if scalar.is_zero() => Err("zero operator".into()),
                None => Ok(()),
            }
        }),
    );
    let m2 = ybe::m2();
    let tensors = ybe::m2_aybe_solutions();
    run.exhaustive("ybe: AYBE solutions on M2 induce Rota-Baxter operators", &tensors, |(name, r)| {
        if !ybe::check_aybe(&m2, r).map_err(err_str)? {
            return Err(format!("{name} fails AYBE"));
        }
        let op = ybe::aybe_to_rb(&m2, r).map_err(err_str)?;
        match ybe::check_rb(&m2, &op, &rat(0)).map_err(err_str)?.first() {
            None => Ok(()),
            Some(v) => Err(format!("{name}: {v}")),
        }
    });
    let mut rng = ChaCha8Rng::seed_from_u64(run.master.gen());
    let mut ops: Vec<ybe::LinearOperator> = vec![ybe::LinearOperator::identity(3), ybe::LinearOperator::zero(3)];
    ops.extend((0..20).map(|_| random_operator(&mut rng, 3)));
    run.exhaustive("ybe: R solves MYBE iff R + id is Rota-Baxter of weight -2 (sl2)", &ops, |op| {
        let report = ybe::check_mybe_correspondence(&g, op).map_err(err_str)?;
        if report.agrees() {
            Ok(())
        } else {
            Err(format!("{:?} disagree for {:?}", report.disagreements, op.matrix()))
        }
    });
}

/// Runs one suite, or all of them in a fixed order.
pub fn run_verify(suite: Suite, opts: &VerifyOptions) -> Result<Report, VerifyError> {
    let (pre, post) = match &opts.presentation {
        None => (builtin_pre(), builtin_post()),
        Some(Presentation::Zinbiel(p)) => {
            if suite == Suite::EnvPost {
                return Err(VerifyError::WrongPresentation { suite, expected: "postcommutative" });
            }
            (vec![("input".to_string(), p.clone())], builtin_post())
        }
        Some(Presentation::Postcommutative(p)) => {
            if matches!(suite, Suite::EnvPre | Suite::Quotient) {
                return Err(VerifyError::WrongPresentation { suite, expected: "Zinbiel" });
            }
            (builtin_pre(), vec![("input".to_string(), p.clone())])
        }
    };
    let mut run = Runner::new(opts.seed, opts.trials);
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    for s in suites {
        match s {
            Suite::Shuffle => shuffle_checks(&mut run),
            Suite::FreeRb => free_rb_checks(&mut run),
            Suite::Quotient => pre.iter().for_each(|(l, p)| quotient_checks(&mut run, l, p)),
            Suite::EnvPre => pre.iter().for_each(|(l, p)| env_pre_checks(&mut run, l, p)),
            Suite::EnvPost => post.iter().for_each(|(l, p)| env_post_checks(&mut run, l, p)),
            Suite::Ybe => ybe_checks(&mut run),
            Suite::All => unreachable!(),
        }
    }
    Ok(Report { suite, seed: opts.seed, trials: opts.trials, checks: run.checks })
}
