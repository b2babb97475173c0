//! Rota-Baxter operators on finite-dimensional associative and Lie algebras
//! and the Yang-Baxter equations that produce them.
//!
//! Everything works in coordinates: an algebra is a table of structure
//! constants `c[i][j][k]` with `x_i x_j = Σ_k c[i][j][k] x_k`, an operator is
//! a square matrix acting on columns, and a two-tensor `Σ r[i][j] x_i ⊗ x_j`
//! is a square matrix of coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{rat, BasisSymbol, LinComb, Rational};

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbeError {
    #[error("symbol `{0}` is not in the algebra basis")]
    UnknownSymbol(BasisSymbol),
    #[error("structure constants violate {identity} at ({x}, {y}, {z})")]
    InvalidStructure { identity: &'static str, x: BasisSymbol, y: BasisSymbol, z: BasisSymbol },
    #[error("expected a {expected} algebra")]
    WrongKind { expected: AlgebraKind },
    #[error("operator has size {found}, algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no bilinear form is attached to the algebra")]
    MissingForm,
    #[error("tensor is not skew-symmetric")]
    NotSkew,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgebraKind {
    Associative,
    Lie,
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::Associative => "associative",
            AlgebraKind::Lie => "Lie",
        })
    }
}

fn zeros(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn add_into(acc: &mut [Rational], v: &[Rational], c: &Rational) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a += x * c;
    }
}

fn sub(u: &[Rational], v: &[Rational]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

/// Finite-dimensional algebra given by structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    kind: AlgebraKind,
    basis: Vec<BasisSymbol>,
    constants: Vec<Vec<Vector>>,
    form: Option<Matrix>,
}

impl FiniteAlgebra {
    /// Validates associativity, or antisymmetry and Jacobi, on basis triples.
    pub fn new(
        kind: AlgebraKind,
        basis: Vec<BasisSymbol>,
        products: &BTreeMap<(BasisSymbol, BasisSymbol), LinComb<BasisSymbol>>,
    ) -> Result<Self, YbeError> {
        let n = basis.len();
        let mut constants = vec![vec![zeros(n); n]; n];
        for ((x, y), value) in products {
            let i = index_of(&basis, x)?;
            let j = index_of(&basis, y)?;
            for (z, c) in value.iter() {
                constants[i][j][index_of(&basis, z)?] = c.clone();
            }
        }
        let alg = FiniteAlgebra { kind, basis, constants, form: None };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), YbeError> {
        let n = self.dim();
        let e = |i: usize| self.unit_vector(i);
        let fail = |identity, i: usize, j: usize, k: usize| YbeError::InvalidStructure {
            identity,
            x: self.basis[i].clone(),
            y: self.basis[j].clone(),
            z: self.basis[k].clone(),
        };
        for i in 0..n {
            for j in 0..n {
                if self.kind == AlgebraKind::Lie {
                    let s: Vector = self.constants[i][j].iter().zip(&self.constants[j][i]).map(|(a, b)| a + b).collect();
                    if !is_zero_vec(&s) {
                        return Err(fail("antisymmetry", i, j, j));
                    }
                }
                for k in 0..n {
                    match self.kind {
                        AlgebraKind::Associative => {
                            let l = self.mul(&self.mul(&e(i), &e(j)), &e(k));
                            let r = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                            if l != r {
                                return Err(fail("associativity", i, j, k));
                            }
                        }
                        AlgebraKind::Lie => {
                            let mut s = self.mul(&e(i), &self.mul(&e(j), &e(k)));
                            add_into(&mut s, &self.mul(&e(j), &self.mul(&e(k), &e(i))), &Rational::one());
                            add_into(&mut s, &self.mul(&e(k), &self.mul(&e(i), &e(j))), &Rational::one());
                            if !is_zero_vec(&s) {
                                return Err(fail("the Jacobi identity", i, j, k));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn basis(&self) -> &[BasisSymbol] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        let mut v = zeros(self.dim());
        v[i] = Rational::one();
        v
    }

    pub fn coords(&self, x: &LinComb<BasisSymbol>) -> Result<Vector, YbeError> {
        let mut v = zeros(self.dim());
        for (b, c) in x.iter() {
            v[index_of(&self.basis, b)?] += c;
        }
        Ok(v)
    }

    pub fn to_lincomb(&self, v: &[Rational]) -> LinComb<BasisSymbol> {
        self.basis.iter().cloned().zip(v.iter().cloned()).collect()
    }

    /// Product (or bracket) of two vectors.
    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let n = self.dim();
        let mut out = zeros(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_into(&mut out, &self.constants[i][j], &(xi * yj));
            }
        }
        out
    }

    /// `tr(ad x ∘ ad y)` on basis pairs.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ad = |i: usize| -> Matrix {
            // column k is [x_i, x_k]
            let mut m = vec![zeros(n); n];
            for k in 0..n {
                for (r, c) in self.constants[i][k].iter().enumerate() {
                    m[r][k] = c.clone();
                }
            }
            m
        };
        let ads: Vec<Matrix> = (0..n).map(ad).collect();
        let mut form = vec![zeros(n); n];
        for i in 0..n {
            for j in 0..n {
                let mut tr = Rational::zero();
                for a in 0..n {
                    for b in 0..n {
                        tr += &ads[i][a][b] * &ads[j][b][a];
                    }
                }
                form[i][j] = tr;
            }
        }
        form
    }

    pub fn with_form(mut self, form: Matrix) -> Self {
        self.form = Some(form);
        self
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }
}

fn index_of(basis: &[BasisSymbol], b: &BasisSymbol) -> Result<usize, YbeError> {
    basis.iter().position(|x| x == b).ok_or_else(|| YbeError::UnknownSymbol(b.clone()))
}

/// Square matrix acting on coordinate columns: `R(x_j) = Σ_i m[i][j] x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> Self {
        LinearOperator { matrix }
    }

    pub fn zero(n: usize) -> Self {
        LinearOperator { matrix: vec![zeros(n); n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = vec![zeros(n); n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Rational::one();
        }
        LinearOperator { matrix: m }
    }

    /// Operator with the given images of the basis elements.
    pub fn from_images(alg: &FiniteAlgebra, images: &[LinComb<BasisSymbol>]) -> Result<Self, YbeError> {
        if images.len() != alg.dim() {
            return Err(YbeError::DimensionMismatch { expected: alg.dim(), found: images.len() });
        }
        let n = alg.dim();
        let mut m = vec![zeros(n); n];
        for (j, img) in images.iter().enumerate() {
            for (i, c) in alg.coords(img)?.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        Ok(LinearOperator { matrix: m })
    }

    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Vector {
        self.matrix.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn plus(&self, other: &LinearOperator) -> LinearOperator {
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| a + b).collect())
            .collect();
        LinearOperator { matrix }
    }

    pub fn scaled(&self, c: &Rational) -> LinearOperator {
        LinearOperator { matrix: self.matrix.iter().map(|r| r.iter().map(|a| a * c).collect()).collect() }
    }

    /// `Some(c)` with `self = c · other` when such a nonzero `c` exists.
    pub fn proportionality(&self, other: &LinearOperator) -> Option<Rational> {
        let mut ratio: Option<Rational> = None;
        for (r, s) in self.matrix.iter().zip(&other.matrix) {
            for (a, b) in r.iter().zip(s) {
                match (a.is_zero(), b.is_zero()) {
                    (true, true) => {}
                    (false, false) => {
                        let q = a / b;
                        if ratio.as_ref().is_some_and(|c| *c != q) {
                            return None;
                        }
                        ratio = Some(q);
                    }
                    _ => return None,
                }
            }
        }
        ratio
    }
}

/// `r = Σ a_i ⊗ b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoTensor {
    pub pairs: Vec<(LinComb<BasisSymbol>, LinComb<BasisSymbol>)>,
}

impl TwoTensor {
    pub fn new(pairs: Vec<(LinComb<BasisSymbol>, LinComb<BasisSymbol>)>) -> Self {
        TwoTensor { pairs }
    }

    pub fn zero() -> Self {
        TwoTensor { pairs: Vec::new() }
    }

    /// Coefficients `r[i][j]` of `x_i ⊗ x_j`.
    pub fn coefficients(&self, alg: &FiniteAlgebra) -> Result<Matrix, YbeError> {
        let n = alg.dim();
        let mut r = vec![zeros(n); n];
        for (a, b) in &self.pairs {
            let (va, vb) = (alg.coords(a)?, alg.coords(b)?);
            for i in 0..n {
                for j in 0..n {
                    r[i][j] += &va[i] * &vb[j];
                }
            }
        }
        Ok(r)
    }

    pub fn is_skew(&self, alg: &FiniteAlgebra) -> Result<bool, YbeError> {
        let r = self.coefficients(alg)?;
        let n = alg.dim();
        Ok((0..n).all(|i| (0..n).all(|j| (&r[i][j] + &r[j][i]).is_zero())))
    }
}

/// Basis pair `(x, y)` where the Rota-Baxter identity fails, with both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbViolation {
    pub x: BasisSymbol,
    pub y: BasisSymbol,
    pub left: LinComb<BasisSymbol>,
    pub right: LinComb<BasisSymbol>,
}

impl fmt::Display for RbViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at ({}, {}): {} != {}", self.x, self.y, self.left, self.right)
    }
}

fn rb_sides(alg: &FiniteAlgebra, r: &LinearOperator, lambda: &Rational, i: usize, j: usize) -> (Vector, Vector) {
    let (x, y) = (alg.unit_vector(i), alg.unit_vector(j));
    let (rx, ry) = (r.apply(&x), r.apply(&y));
    let left = alg.mul(&rx, &ry);
    let mut inner = alg.mul(&rx, &y);
    add_into(&mut inner, &alg.mul(&x, &ry), &Rational::one());
    add_into(&mut inner, &alg.mul(&x, &y), lambda);
    (left, r.apply(&inner))
}

/// `R(x)R(y) = R(R(x)y + xR(y) + λxy)` on every basis pair.
pub fn check_rb(alg: &FiniteAlgebra, r: &LinearOperator, lambda: &Rational) -> Result<Vec<RbViolation>, YbeError> {
    if r.size() != alg.dim() {
        return Err(YbeError::DimensionMismatch { expected: alg.dim(), found: r.size() });
    }
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (left, right) = rb_sides(alg, r, lambda, i, j);
            if left != right {
                out.push(RbViolation {
                    x: alg.basis[i].clone(),
                    y: alg.basis[j].clone(),
                    left: alg.to_lincomb(&left),
                    right: alg.to_lincomb(&right),
                });
            }
        }
    }
    Ok(out)
}

/// Element of `A ⊗ A ⊗ A` as a dense `n³` array.
struct Cube {
    n: usize,
    data: Vec<Rational>,
}

impl Cube {
    fn new(n: usize) -> Self {
        Cube { n, data: zeros(n * n * n) }
    }

    /// Adds `c · (u ⊗ v ⊗ w)`.
    fn add(&mut self, c: &Rational, u: &[Rational], v: &[Rational], w: &[Rational]) {
        let n = self.n;
        for (i, ui) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let uv = c * ui * vj;
                for (k, wk) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    self.data[(i * n + j) * n + k] += &uv * wk;
                }
            }
        }
    }

    fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }
}

fn nonzero_entries(r: &Matrix) -> Vec<(usize, usize, Rational)> {
    let mut out = Vec::new();
    for (i, row) in r.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                out.push((i, j, c.clone()));
            }
        }
    }
    out
}

/// `[r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃] = 0`.
pub fn check_cybe(g: &FiniteAlgebra, r: &TwoTensor) -> Result<bool, YbeError> {
    if g.kind != AlgebraKind::Lie {
        return Err(YbeError::WrongKind { expected: AlgebraKind::Lie });
    }
    let terms = nonzero_entries(&r.coefficients(g)?);
    let e = |i: usize| g.unit_vector(i);
    let mut cube = Cube::new(g.dim());
    for (i, j, c) in &terms {
        for (k, l, d) in &terms {
            let cd = c * d;
            cube.add(&cd, &g.mul(&e(*i), &e(*k)), &e(*j), &e(*l));
            cube.add(&cd, &e(*i), &g.mul(&e(*j), &e(*k)), &e(*l));
            cube.add(&cd, &e(*i), &e(*k), &g.mul(&e(*j), &e(*l)));
        }
    }
    Ok(cube.is_zero())
}

/// `R(x) = Σ ⟨a_i, x⟩ b_i` using the attached form.
pub fn cybe_to_rb(g: &FiniteAlgebra, r: &TwoTensor) -> Result<LinearOperator, YbeError> {
    let form = g.form().ok_or(YbeError::MissingForm)?;
    if !r.is_skew(g)? {
        return Err(YbeError::NotSkew);
    }
    let coeffs = r.coefficients(g)?;
    let n = g.dim();
    let mut m = vec![zeros(n); n];
    for (i, j, c) in nonzero_entries(&coeffs) {
        for (col, f) in form[i].iter().enumerate() {
            m[j][col] += &c * f;
        }
    }
    Ok(LinearOperator::new(m))
}

/// `r₁₃r₁₂ − r₁₂r₂₃ + r₂₃r₁₃ = 0`.
pub fn check_aybe(a: &FiniteAlgebra, r: &TwoTensor) -> Result<bool, YbeError> {
    if a.kind != AlgebraKind::Associative {
        return Err(YbeError::WrongKind { expected: AlgebraKind::Associative });
    }
    let terms = nonzero_entries(&r.coefficients(a)?);
    let e = |i: usize| a.unit_vector(i);
    let minus = -Rational::one();
    let mut cube = Cube::new(a.dim());
    for (i, j, c) in &terms {
        for (k, l, d) in &terms {
            let cd = c * d;
            // r₁₃r₁₂ = Σ a_i a_k ⊗ b_k ⊗ b_i
            cube.add(&cd, &a.mul(&e(*i), &e(*k)), &e(*l), &e(*j));
            // r₁₂r₂₃ = Σ a_i ⊗ b_i a_k ⊗ b_k
            cube.add(&(&cd * &minus), &e(*i), &a.mul(&e(*j), &e(*k)), &e(*l));
            // r₂₃r₁₃ = Σ a_k ⊗ a_i ⊗ b_i b_k
            cube.add(&cd, &e(*k), &e(*i), &a.mul(&e(*j), &e(*l)));
        }
    }
    Ok(cube.is_zero())
}

/// `R(x) = Σ a_i x b_i`.
pub fn aybe_to_rb(a: &FiniteAlgebra, r: &TwoTensor) -> Result<LinearOperator, YbeError> {
    if a.kind != AlgebraKind::Associative {
        return Err(YbeError::WrongKind { expected: AlgebraKind::Associative });
    }
    let terms = nonzero_entries(&r.coefficients(a)?);
    let n = a.dim();
    let mut m = vec![zeros(n); n];
    for col in 0..n {
        let x = a.unit_vector(col);
        let mut image = zeros(n);
        for (i, j, c) in &terms {
            add_into(&mut image, &a.mul(&a.mul(&a.unit_vector(*i), &x), &a.unit_vector(*j)), c);
        }
        for (row, v) in image.into_iter().enumerate() {
            m[row][col] = v;
        }
    }
    Ok(LinearOperator::new(m))
}

/// Per-pair comparison of the modified Yang-Baxter equation for `R` with
/// the weight −2 Rota-Baxter identity for `R + id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MybeReport {
    pub pairs: usize,
    pub mybe_holds: usize,
    pub shifted_rb_holds: usize,
    /// Pairs where exactly one of the two statements holds.
    pub disagreements: Vec<(BasisSymbol, BasisSymbol)>,
}

impl MybeReport {
    pub fn agrees(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn mybe(&self) -> bool {
        self.mybe_holds == self.pairs
    }
}

pub fn check_mybe_correspondence(l: &FiniteAlgebra, r: &LinearOperator) -> Result<MybeReport, YbeError> {
    if l.kind != AlgebraKind::Lie {
        return Err(YbeError::WrongKind { expected: AlgebraKind::Lie });
    }
    if r.size() != l.dim() {
        return Err(YbeError::DimensionMismatch { expected: l.dim(), found: r.size() });
    }
    let n = l.dim();
    let shifted = r.plus(&LinearOperator::identity(n));
    let mut report = MybeReport { pairs: n * n, mybe_holds: 0, shifted_rb_holds: 0, disagreements: Vec::new() };
    for i in 0..n {
        for j in 0..n {
            // R(x)R(y) − R(R(x)y + xR(y)) = −xy is the weight-0 difference plus xy
            let (left, right) = rb_sides(l, r, &Rational::zero(), i, j);
            let mut diff = sub(&left, &right);
            add_into(&mut diff, &l.mul(&l.unit_vector(i), &l.unit_vector(j)), &Rational::one());
            let mybe = is_zero_vec(&diff);
            let (sl, sr) = rb_sides(l, &shifted, &rat(-2), i, j);
            let rb = sl == sr;
            report.mybe_holds += usize::from(mybe);
            report.shifted_rb_holds += usize::from(rb);
            if mybe != rb {
                report.disagreements.push((l.basis[i].clone(), l.basis[j].clone()));
            }
        }
    }
    Ok(report)
}

fn sym(s: &str) -> BasisSymbol {
    s.parse().expect("builtin symbol")
}

fn lc(terms: &[(i64, &str)]) -> LinComb<BasisSymbol> {
    terms.iter().map(|(c, s)| (sym(s), rat(*c))).collect()
}

/// `sl₂` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f` and its Killing form.
pub fn sl2() -> FiniteAlgebra {
    let mut t = BTreeMap::new();
    let mut set = |x: &str, y: &str, v: LinComb<BasisSymbol>| {
        t.insert((sym(y), sym(x)), -v.clone());
        t.insert((sym(x), sym(y)), v);
    };
    set("e", "f", lc(&[(1, "h")]));
    set("h", "e", lc(&[(2, "e")]));
    set("h", "f", lc(&[(-2, "f")]));
    let g = FiniteAlgebra::new(AlgebraKind::Lie, vec![sym("e"), sym("f"), sym("h")], &t).expect("sl2 is a Lie algebra");
    let k = g.killing_form();
    g.with_form(k)
}

/// `M₂` with matrix units `e11, e12, e21, e22`.
pub fn m2() -> FiniteAlgebra {
    let basis: Vec<BasisSymbol> = ["e11", "e12", "e21", "e22"].iter().map(|s| sym(s)).collect();
    let mut t = BTreeMap::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for k in 1..=2 {
                // e_ij e_jk = e_ik
                t.insert(
                    (BasisSymbol::indexed("e", 10 * i + j), BasisSymbol::indexed("e", 10 * j + k)),
                    LinComb::basis(BasisSymbol::indexed("e", 10 * i + k)),
                );
            }
        }
    }
    FiniteAlgebra::new(AlgebraKind::Associative, basis, &t).expect("M2 is associative")
}

/// `𝕜ⁿ` with componentwise product and the partial-sum operator, weight −1.
pub fn partial_sums(n: usize) -> (FiniteAlgebra, LinearOperator) {
    let basis: Vec<BasisSymbol> = (1..=n as u64).map(|i| BasisSymbol::indexed("a", i)).collect();
    let t = basis.iter().map(|b| ((b.clone(), b.clone()), LinComb::basis(b.clone()))).collect();
    let alg = FiniteAlgebra::new(AlgebraKind::Associative, basis, &t).expect("componentwise product");
    // R(a)_k = Σ_{i ≤ k} a_i
    let m = (0..n).map(|row| (0..n).map(|col| if col <= row { rat(1) } else { rat(0) }).collect()).collect();
    (alg, LinearOperator::new(m))
}

/// `e⊗h − h⊗e` on `sl₂`.
pub fn sl2_cybe_solution() -> TwoTensor {
    TwoTensor::new(vec![(lc(&[(1, "e")]), lc(&[(1, "h")])), (lc(&[(-1, "h")]), lc(&[(1, "e")]))])
}

/// `R(e) = 0`, `R(f) = 4h`, `R(h) = −8e`.
pub fn sl2_reference_operator() -> LinearOperator {
    LinearOperator::from_images(&sl2(), &[LinComb::zero(), lc(&[(4, "h")]), lc(&[(-8, "e")])]).expect("sl2 operator")
}

/// Representatives of the nonzero solutions of the associative Yang-Baxter
/// equation on `M₂`.
pub fn m2_aybe_solutions() -> Vec<(&'static str, TwoTensor)> {
    vec![
        ("(e11+e22)⊗e12", TwoTensor::new(vec![(lc(&[(1, "e11"), (1, "e22")]), lc(&[(1, "e12")]))])),
        ("e12⊗e12", TwoTensor::new(vec![(lc(&[(1, "e12")]), lc(&[(1, "e12")]))])),
        ("e22⊗e12", TwoTensor::new(vec![(lc(&[(1, "e22")]), lc(&[(1, "e12")]))])),
        (
            "e11⊗e12 − e12⊗e11",
            TwoTensor::new(vec![(lc(&[(1, "e11")]), lc(&[(1, "e12")])), (lc(&[(-1, "e12")]), lc(&[(1, "e11")]))]),
        ),
    ]
}
