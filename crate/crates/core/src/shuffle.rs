//! Shuffle, quasi-shuffle and half-shuffle products on words.
//!
//! All three run through one recursion over generic letters:
//!
//! ```text
//! a ⋄λ b = a1 ⊗ (a' ⋄λ b) + b1 ⊗ (a ⋄λ b') + λ (a1·b1) ⊗ (a' ⋄λ b')
//! ```
//!
//! with the empty word acting as the unit. At `λ = 0` this is the plain
//! shuffle.

use num_traits::{One, Zero};

use crate::scalar::{LinComb, Rational, TensorWord};

/// Quasi-shuffle of two words over arbitrary letters.
///
/// `merge` multiplies two letters into a combination of letters; it is never
/// consulted when `lambda` is zero.
pub fn quasi_shuffle_words<L, F>(a: &[L], b: &[L], lambda: &Rational, merge: &F) -> LinComb<Vec<L>>
where
    L: Ord + Clone,
    F: Fn(&L, &L) -> LinComb<L>,
{
    // table[i][j] = a[i..] ⋄λ b[j..], filled from the back
    let (m, n) = (a.len(), b.len());
    let mut table: Vec<Vec<LinComb<Vec<L>>>> = vec![vec![LinComb::zero(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            table[i][j] = if i == m {
                LinComb::basis(b[j..].to_vec())
            } else if j == n {
                LinComb::basis(a[i..].to_vec())
            } else {
                let mut out = LinComb::zero();
                prefix_into(&mut out, &a[i], &table[i + 1][j], &Rational::one());
                prefix_into(&mut out, &b[j], &table[i][j + 1], &Rational::one());
                if !lambda.is_zero() {
                    for (letter, c) in merge(&a[i], &b[j]).iter() {
                        prefix_into(&mut out, letter, &table[i + 1][j + 1], &(c * lambda));
                    }
                }
                out
            };
        }
    }
    std::mem::take(&mut table[0][0])
}

fn prefix_into<L: Ord + Clone>(out: &mut LinComb<Vec<L>>, head: &L, rest: &LinComb<Vec<L>>, c: &Rational) {
    for (w, d) in rest.iter() {
        let mut v = Vec::with_capacity(w.len() + 1);
        v.push(head.clone());
        v.extend_from_slice(w);
        out.add_term(v, if c.is_one() { d.clone() } else { d * c });
    }
}

/// Plain shuffle of two words over arbitrary letters.
pub fn shuffle_words<L: Ord + Clone>(a: &[L], b: &[L]) -> LinComb<Vec<L>> {
    quasi_shuffle_words(a, b, &Rational::zero(), &|_: &L, _: &L| LinComb::zero())
}

fn to_tensor(lc: LinComb<Vec<crate::scalar::BasisSymbol>>) -> LinComb<TensorWord> {
    lc.into_terms().map(|(w, c)| (TensorWord::from_vec_unchecked(w), c)).collect()
}

/// Sum of all interleavings of `a` and `b`, with multiplicity.
pub fn shuffle(a: &TensorWord, b: &TensorWord) -> LinComb<TensorWord> {
    to_tensor(shuffle_words(a.letters(), b.letters()))
}

/// Quasi-shuffle with letter product `mul` and weight `lambda`.
pub fn quasi_shuffle<F>(a: &TensorWord, b: &TensorWord, lambda: &Rational, mul: F) -> LinComb<TensorWord>
where
    F: Fn(&crate::scalar::BasisSymbol, &crate::scalar::BasisSymbol) -> LinComb<crate::scalar::BasisSymbol>,
{
    to_tensor(quasi_shuffle_words(a.letters(), b.letters(), lambda, &mul))
}

/// The free Zinbiel product: shuffle `a` with `b` minus its last letter, then
/// append that letter.
pub fn half_shuffle(a: &TensorWord, b: &TensorWord) -> LinComb<TensorWord> {
    let (last, init) = b.letters().split_last().expect("tensor words are nonempty");
    shuffle_words(a.letters(), init)
        .into_terms()
        .map(|(mut w, c)| {
            w.push(last.clone());
            (TensorWord::from_vec_unchecked(w), c)
        })
        .collect()
}

/// Bilinear extension of a word product.
pub fn extend_bilinear(
    x: &LinComb<TensorWord>,
    y: &LinComb<TensorWord>,
    f: impl Fn(&TensorWord, &TensorWord) -> LinComb<TensorWord>,
) -> LinComb<TensorWord> {
    crate::scalar::lincomb_apply_bilinear(x, y, |a, b| Ok::<_, std::convert::Infallible>(f(a, b)))
        .unwrap_or_else(|e| match e {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BasisSymbol};

    fn w(s: &str) -> TensorWord {
        s.parse().unwrap()
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb<TensorWord> {
        terms.iter().map(|(s, c)| (w(s), rat(*c))).collect()
    }

    #[test]
    fn six_shuffles_of_two_pairs() {
        let out = shuffle(&w("a1.a2"), &w("b1.b2"));
        let expected = lc(&[
            ("a1.a2.b1.b2", 1),
            ("a1.b1.a2.b2", 1),
            ("a1.b1.b2.a2", 1),
            ("b1.a1.a2.b2", 1),
            ("b1.a1.b2.a2", 1),
            ("b1.b2.a1.a2", 1),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn singleton_shuffles() {
        assert_eq!(shuffle(&w("a"), &w("b")), lc(&[("a.b", 1), ("b.a", 1)]));
        assert_eq!(shuffle(&w("x"), &w("x")), lc(&[("x.x", 2)]));
    }

    #[test]
    fn quasi_shuffle_unfoldings() {
        let c = BasisSymbol::new("c");
        let out = quasi_shuffle(&w("a"), &w("b"), &rat(1), |_, _| LinComb::basis(c.clone()));
        assert_eq!(out, lc(&[("a.b", 1), ("b.a", 1), ("c", 1)]));

        let x = BasisSymbol::new("x");
        let out = quasi_shuffle(&w("x"), &w("x"), &rat(-1), |_, _| LinComb::basis(x.clone()));
        assert_eq!(out, lc(&[("x.x", 2), ("x", -1)]));
    }

    #[test]
    fn half_shuffle_examples() {
        assert_eq!(half_shuffle(&w("x"), &w("y")), lc(&[("x.y", 1)]));
        assert_eq!(half_shuffle(&w("x"), &w("y.z")), lc(&[("x.y.z", 1), ("y.x.z", 1)]));
    }

    #[test]
    fn zinbiel_on_letters() {
        let (x, y, z) = (w("x"), w("y"), w("z"));
        let right = extend_bilinear(&LinComb::basis(x.clone()), &half_shuffle(&y, &z), half_shuffle);
        let xy = half_shuffle(&x, &y) + half_shuffle(&y, &x);
        let left = extend_bilinear(&xy, &LinComb::basis(z), half_shuffle);
        assert_eq!(left, right);
        assert_eq!(left, lc(&[("x.y.z", 1), ("y.x.z", 1)]));
    }
}
