//! Multiplication by line bundles in the Schubert basis `[O_ω]`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::KClass;
use crate::charring::{t_operator, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight};
use crate::weyl::{WeylMatrix, Word};

/// `[L(α)]·u`, expanding each basis class along its canonical reduced word.
pub fn line_bundle_mult(rs: &RootSystem, alpha: &Weight, u: &KClass) -> KClass {
    u.map_basis(|w| chevalley_along(rs, alpha, w.word()))
}

/// `[L(α)][O_ω]` computed along a given reduced word of `ω`.
pub fn line_bundle_mult_along(rs: &RootSystem, alpha: &Weight, word: &Word) -> Result<KClass> {
    if !rs.is_reduced(word)? {
        return Err(Error::NotReduced(word.clone()));
    }
    Ok(chevalley_along(rs, alpha, word))
}

/// `Σ_ε T^{ε_1}_{−α_{i_1}}⋯T^{ε_n}_{−α_{i_n}}(e^α)·[O_{x(ε)}]`.
///
/// The operators are applied right to left. Branches are merged by the
/// Demazure product of the letters selected so far, which is all the final
/// index `x(ε)` depends on: `x(ε) = Δ(prefix)⋆Δ(suffix)`.
fn chevalley_along(rs: &RootSystem, alpha: &Weight, word: &Word) -> KClass {
    let roots: Vec<(usize, Root)> = word.letters().iter().map(|&l| (l as usize, -rs.simple_root(l as usize))).collect();
    let mut states: BTreeMap<WeylMatrix, LaurentPolynomial> = BTreeMap::new();
    states.insert(WeylMatrix::IDENTITY, LaurentPolynomial::exp(*alpha));
    for (i, beta) in roots.iter().rev() {
        let mut next: BTreeMap<WeylMatrix, LaurentPolynomial> = BTreeMap::new();
        for (m, value) in &states {
            let kept = t_operator(beta, false, value);
            if !kept.is_zero() {
                *next.entry(*m).or_default() += &kept;
            }
            let taken = t_operator(beta, true, value);
            *next.entry(rs.demazure_left(*i, m)).or_default() += &taken;
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    KClass::from_terms(states.into_iter().map(|(m, v)| (rs.element(m), v)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::WeylElement;

    fn e(rs: &RootSystem, simple: &[i32]) -> LaurentPolynomial {
        LaurentPolynomial::exp(rs.from_simple_coords(&Weight::new(simple)))
    }

    fn x(rs: &RootSystem, w: &[u8]) -> WeylElement {
        rs.from_word(&Word::new(w)).unwrap()
    }

    #[test]
    fn rank_one_identities() {
        let rs = RootSystem::build('A', 1).unwrap();
        let alpha = rs.simple_root_weight(1);
        let id = KClass::basis(rs.identity());
        assert_eq!(line_bundle_mult(&rs, &alpha, &id), KClass::term(rs.identity(), e(&rs, &[1])));
        let s1 = x(&rs, &[1]);
        let expected = KClass::from_terms([
            (s1.clone(), e(&rs, &[-1])),
            (rs.identity(), -&(&LaurentPolynomial::one() + &e(&rs, &[-1]))),
        ]);
        assert_eq!(line_bundle_mult(&rs, &alpha, &KClass::basis(s1)), expected);
    }

    /// Leaf-by-leaf enumeration of all masks, the literal form of the sum.
    fn chevalley_by_masks(rs: &RootSystem, alpha: &Weight, word: &Word) -> KClass {
        let n = word.len();
        let mut out = KClass::zero();
        for bits in 0u32..(1 << n) {
            let mask: Vec<bool> = (0..n).map(|k| bits >> k & 1 == 1).collect();
            let mut value = LaurentPolynomial::exp(*alpha);
            for k in (0..n).rev() {
                let beta = -rs.simple_root(word.letters()[k] as usize);
                value = t_operator(&beta, mask[k], &value);
            }
            out.add_term(rs.subword_mask(word, &mask).unwrap(), &value);
        }
        out
    }

    #[test]
    fn merged_enumeration_matches_masks() {
        for (letter, rank) in [('A', 2), ('B', 2), ('G', 2), ('A', 3)] {
            let rs = RootSystem::build(letter, rank).unwrap();
            let alphas = [rs.simple_root_weight(1), -rs.highest_root().weight(), Weight::new(&[1, -2])];
            for w in rs.all_elements() {
                for alpha in &alphas {
                    assert_eq!(
                        chevalley_along(&rs, alpha, w.word()),
                        chevalley_by_masks(&rs, alpha, w.word()),
                        "{letter}{rank} {w}"
                    );
                }
            }
        }
    }

    #[test]
    fn leading_coefficient_on_longest_a2() {
        let rs = RootSystem::build('A', 2).unwrap();
        let w0 = rs.longest_element();
        let alpha = -rs.simple_root_weight(1);
        let got = line_bundle_mult(&rs, &alpha, &KClass::basis(w0.clone()));
        // the all-ones mask contributes e^{w0(α)}
        assert_eq!(got.coefficient(&w0), LaurentPolynomial::exp(w0.act(&alpha)));
        assert_eq!(w0.act(&alpha), rs.simple_root_weight(2));
    }

    #[test]
    fn word_independence() {
        for (letter, rank) in [('A', 2), ('B', 2), ('G', 2)] {
            let rs = RootSystem::build(letter, rank).unwrap();
            let alpha = Weight::new(&[2, -1]);
            for w in rs.all_elements() {
                let reference = line_bundle_mult(&rs, &alpha, &KClass::basis(w.clone()));
                for word in rs.reduced_words(&w) {
                    assert_eq!(line_bundle_mult_along(&rs, &alpha, &word).unwrap(), reference);
                }
            }
        }
        let rs = RootSystem::build('A', 2).unwrap();
        assert!(matches!(line_bundle_mult_along(&rs, &Weight::ZERO, &Word::new([1, 1])), Err(Error::NotReduced(_))));
    }
}
