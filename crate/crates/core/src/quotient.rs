//! The commutative algebra `A = k[B]/I` attached to a Zinbiel algebra, where
//! `I` is generated by `(b≻a)c − (b≻c)a` for basis triples.
//!
//! `I` is homogeneous of degree 2, so its degree-`k` part is the span of the
//! generators times degree-`k−2` monomials. Each degree is row reduced on its
//! own under deglex; the leading monomials are exactly the non-standard ones.

use std::collections::BTreeMap;

use num_traits::One;
use thiserror::Error;

use crate::presentation::PrecomPresentation;
use crate::scalar::{row_reduce, BasisSymbol, LinComb, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("monomial of degree {degree} exceeds the built bound {built}; rebuild with a larger degree")]
    DegreeOverflow { degree: usize, built: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct DegreeData {
    standard: Vec<Monomial>,
    /// Non-standard monomial -> its normal form over standard monomials.
    reduction: BTreeMap<Monomial, LinComb<Monomial>>,
    /// Reduced echelon basis of `I` in this degree.
    ideal_rows: Vec<LinComb<Monomial>>,
}

/// `k[B]/I` with normal forms computed up to [`QuotientAlgebra::max_degree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    presentation: PrecomPresentation,
    generators: Vec<LinComb<Monomial>>,
    degrees: Vec<DegreeData>,
}

fn lift(lc: &LinComb<BasisSymbol>) -> LinComb<Monomial> {
    lc.map_keys(|b| Monomial::single(b.clone()))
}

fn mul_mono(x: &LinComb<Monomial>, m: &Monomial) -> LinComb<Monomial> {
    x.map_keys(|k| k.mul(m))
}

/// The generators `(b≻a)c − (b≻c)a` of `I`, as polynomials in `k[B]`.
pub fn ideal_generators(p: &PrecomPresentation) -> Vec<LinComb<Monomial>> {
    let mut out = Vec::new();
    for b in &p.basis {
        for a in &p.basis {
            for c in &p.basis {
                let ba = mul_mono(&lift(&p.succ(b, a)), &Monomial::single(c.clone()));
                let bc = mul_mono(&lift(&p.succ(b, c)), &Monomial::single(a.clone()));
                let g = ba - bc;
                if !g.is_zero() {
                    out.push(g);
                }
            }
        }
    }
    out
}

impl QuotientAlgebra {
    pub fn build(p: &PrecomPresentation, max_degree: usize) -> Self {
        assert!(max_degree >= 1);
        let mut q = QuotientAlgebra {
            presentation: p.clone(),
            generators: ideal_generators(p),
            degrees: Vec::new(),
        };
        q.grow(max_degree);
        q
    }

    /// A new instance built to at least `max_degree`; already built degrees
    /// are carried over unchanged.
    pub fn extend(&self, max_degree: usize) -> Self {
        let mut q = self.clone();
        q.grow(max_degree);
        q
    }

    fn grow(&mut self, max_degree: usize) {
        while self.degrees.len() < max_degree {
            let k = self.degrees.len() + 1;
            let rows: Vec<LinComb<Monomial>> = match k {
                1 => Vec::new(),
                2 => self.generators.clone(),
                _ => {
                    // I_k = I_{k-1} · B
                    let prev = &self.degrees[k - 2].ideal_rows;
                    prev.iter()
                        .flat_map(|r| {
                            self.presentation.basis.iter().map(move |b| mul_mono(r, &Monomial::single(b.clone())))
                        })
                        .collect()
                }
            };
            let ech = row_reduce(rows);
            let mut reduction = BTreeMap::new();
            for (lead, row) in ech.leading.iter().zip(&ech.rows) {
                let mut tail = row.clone();
                tail.add_term(lead.clone(), -num_traits::one::<crate::scalar::Rational>());
                reduction.insert(lead.clone(), -tail);
            }
            let standard = Monomial::all_of_degree(&self.presentation.basis, k)
                .into_iter()
                .filter(|m| !reduction.contains_key(m))
                .collect();
            self.degrees.push(DegreeData { standard, reduction, ideal_rows: ech.rows });
        }
    }

    pub fn presentation(&self) -> &PrecomPresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[LinComb<Monomial>] {
        &self.generators
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.len()
    }

    /// Standard monomials of degree `k` (empty if `k` is out of range).
    pub fn standard(&self, k: usize) -> &[Monomial] {
        k.checked_sub(1)
            .and_then(|i| self.degrees.get(i))
            .map(|d| d.standard.as_slice())
            .unwrap_or(&[])
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.standard.len()).collect()
    }

    pub fn is_standard(&self, m: &Monomial) -> Result<bool, QuotientError> {
        Ok(!self.data(m.degree())?.reduction.contains_key(m))
    }

    fn data(&self, degree: usize) -> Result<&DegreeData, QuotientError> {
        self.degrees
            .get(degree - 1)
            .ok_or(QuotientError::DegreeOverflow { degree, built: self.degrees.len() })
    }

    pub fn reduce_monomial(&self, m: &Monomial) -> Result<LinComb<Monomial>, QuotientError> {
        let d = self.data(m.degree())?;
        Ok(d.reduction.get(m).cloned().unwrap_or_else(|| LinComb::basis(m.clone())))
    }

    /// Normal form over standard monomials.
    pub fn reduce(&self, x: &LinComb<Monomial>) -> Result<LinComb<Monomial>, QuotientError> {
        x.map_linear(|m| self.reduce_monomial(m))
    }

    pub fn multiply(&self, x: &LinComb<Monomial>, y: &LinComb<Monomial>) -> Result<LinComb<Monomial>, QuotientError> {
        crate::scalar::lincomb_apply_bilinear(x, y, |a, b| self.reduce_monomial(&a.mul(b)))
    }

    /// `w · (b ≻ a)` in `A`, with an absent `w` meaning just `b ≻ a`.
    pub fn times_succ(
        &self,
        w: Option<&Monomial>,
        b: &BasisSymbol,
        a: &BasisSymbol,
    ) -> Result<LinComb<Monomial>, QuotientError> {
        let ba = lift(&self.presentation.succ(b, a));
        match w {
            None => Ok(ba),
            Some(w) => self.reduce(&mul_mono(&ba, w)),
        }
    }
}

/// Helper for tests and callers: the monomial `m` as a one-term combination.
pub fn mono(m: &Monomial) -> LinComb<Monomial> {
    LinComb::term(m.clone(), crate::scalar::Rational::one())
}
