//! Equivariant K-theory of `G/B` in the Schubert basis `[O_ω]` over
//! `R(T)[y]`: Demazure operators, line bundle multiplication and the Weyl
//! group action `s_i^K`.

mod chevalley;
mod localization;

pub use chevalley::{line_bundle_mult, line_bundle_mult_along};
pub use localization::{FixedPointVector, Localization};

use alloc::vec::Vec;

use crate::charring::LaurentPolynomial;
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::matrix::ActionMatrix;
use crate::rootsys::{CartanType, RootSystem, Sign};
use crate::weyl::WeylElement;

/// `Σ a_ω [O_ω]` with `a_ω ∈ R(T)[y]`.
pub type KClass = Combination<LaurentPolynomial>;

/// Demazure operator: `[O_ω] ↦ [O_{ωs_i}]` on ascents, `[O_ω]` on descents.
pub fn demazure_k(rs: &RootSystem, i: usize, u: &KClass) -> Result<KClass> {
    rs.check_index(i)?;
    Ok(u.map_basis(|w| KClass::basis(if rs.is_ascent(w, i) { rs.mul_simple(w, i) } else { w.clone() })))
}

/// `s_i^K(u) = [L(−α_i)](u − ∂_i u) + ∂_i u`.
pub fn si_k(rs: &RootSystem, i: usize, u: &KClass) -> Result<KClass> {
    let d = demazure_k(rs, i, u)?;
    let diff = u - &d;
    Ok(&line_bundle_mult(rs, &-rs.simple_root_weight(i), &diff) + &d)
}

/// Matrix of `s_i^K` on the Schubert basis, in the order of
/// [`RootSystem::all_elements`].
pub fn si_k_matrix(rs: &RootSystem, i: usize) -> Result<ActionMatrix<LaurentPolynomial>> {
    let order = rs.all_elements();
    let columns = order.iter().map(|w| si_k(rs, i, &KClass::basis(w.clone()))).collect::<Result<Vec<_>>>()?;
    Ok(ActionMatrix::from_columns(order, &columns))
}

/// Terms of length `≥ ℓ(ω)` of `s_i^K[O_ω]` in type A, in closed form:
/// `(1 − e^{ω(α_i)})[O_{ωs_i}] − [O_ω]
///  − Σ_{β∈C_i, (α_i,β)>0} e^{−ωs_is_β(α_i)}[O_{ωs_is_β}]
///  + Σ_{β∈C_i, (α_i,β)<0} e^{ω(α_i)}[O_{ωs_is_β}]`.
pub fn sln_si_leading(rs: &RootSystem, w: &WeylElement, i: usize) -> Result<KClass> {
    if !matches!(rs.cartan_type(), CartanType::A(_)) {
        return Err(Error::PreconditionViolated("closed form is only valid in type A"));
    }
    rs.check_index(i)?;
    if !rs.is_ascent(w, i) {
        return Err(Error::PreconditionViolated("closed form needs an ascent"));
    }
    let alpha = rs.simple_root_weight(i);
    let w_alpha = w.act(&alpha);
    let wsi = rs.mul_simple(w, i);
    let mut out = KClass::from_terms([
        (wsi.clone(), LaurentPolynomial::one_minus_exp(w_alpha)),
        (w.clone(), LaurentPolynomial::constant(-1)),
    ]);
    for beta in rs.support_set_c(w, i)? {
        let v = rs.mul(&wsi, &rs.reflection(&beta));
        let coeff = match rs.inner_sign(&alpha, &beta.weight()) {
            Sign::Positive => -LaurentPolynomial::exp(-v.act(&alpha)),
            Sign::Negative => LaurentPolynomial::exp(w_alpha),
            Sign::Zero => unreachable!("C_i excludes orthogonal roots"),
        };
        out.add_term(v, &coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Weight;
    use crate::weyl::Word;

    fn x(rs: &RootSystem, w: &[u8]) -> WeylElement {
        rs.from_word(&Word::new(w)).unwrap()
    }

    fn e(rs: &RootSystem, simple: &[i32]) -> LaurentPolynomial {
        LaurentPolynomial::exp(rs.from_simple_coords(&Weight::new(simple)))
    }

    fn one() -> LaurentPolynomial {
        LaurentPolynomial::one()
    }

    #[test]
    fn demazure_rule() {
        let rs = RootSystem::build('A', 2).unwrap();
        let id = KClass::basis(rs.identity());
        let s1 = x(&rs, &[1]);
        assert_eq!(demazure_k(&rs, 1, &id).unwrap(), KClass::basis(s1.clone()));
        assert_eq!(demazure_k(&rs, 1, &KClass::basis(s1.clone())).unwrap(), KClass::basis(s1.clone()));
        let c = e(&rs, &[1, 0]);
        assert_eq!(demazure_k(&rs, 1, &id.scale(&c)).unwrap(), KClass::term(s1, c));
    }

    #[test]
    fn rank_two_columns() {
        let rs = RootSystem::build('A', 2).unwrap();
        let got = si_k(&rs, 1, &KClass::basis(rs.identity())).unwrap();
        let expected = KClass::from_terms([
            (rs.identity(), LaurentPolynomial::constant(-1)),
            (x(&rs, &[1]), &one() - &e(&rs, &[1, 0])),
        ]);
        assert_eq!(got, expected);
        let got = si_k(&rs, 1, &KClass::basis(x(&rs, &[2]))).unwrap();
        let expected = KClass::from_terms([
            (x(&rs, &[1]), -e(&rs, &[1, 0])),
            (x(&rs, &[2]), LaurentPolynomial::constant(-1)),
            (x(&rs, &[2, 1]), &one() - &e(&rs, &[1, 1])),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn rank_one_matrix() {
        let rs = RootSystem::build('A', 1).unwrap();
        let m = si_k_matrix(&rs, 1).unwrap();
        assert_eq!(*m.entry(0, 0), LaurentPolynomial::constant(-1));
        assert!(m.entry(0, 1).is_zero());
        assert_eq!(*m.entry(1, 0), &one() - &e(&rs, &[1]));
        assert_eq!(*m.entry(1, 1), one());
        assert!(m.compose(&m).is_identity());
    }

    #[test]
    fn involution_and_braid() {
        for (letter, rank) in [('A', 2), ('B', 2), ('G', 2)] {
            let rs = RootSystem::build(letter, rank).unwrap();
            let m1 = si_k_matrix(&rs, 1).unwrap();
            let m2 = si_k_matrix(&rs, 2).unwrap();
            assert!(m1.compose(&m1).is_identity());
            assert!(m2.compose(&m2).is_identity());
            let p = m1.compose(&m2);
            let mut acc = p.clone();
            for _ in 1..rs.cartan_type().coxeter_order(1, 2) {
                acc = acc.compose(&p);
            }
            assert!(acc.is_identity(), "{letter}{rank}");
        }
    }

    #[test]
    fn sln_closed_form_examples() {
        let rs = RootSystem::build('A', 2).unwrap();
        let s1s2 = x(&rs, &[1, 2]);
        let expected = KClass::from_terms([
            (x(&rs, &[1, 2, 1]), &one() - &e(&rs, &[0, 1])),
            (s1s2.clone(), LaurentPolynomial::constant(-1)),
            (x(&rs, &[2, 1]), e(&rs, &[0, 1])),
        ]);
        assert_eq!(sln_si_leading(&rs, &s1s2, 1).unwrap(), expected);
        let s2 = x(&rs, &[2]);
        let expected = KClass::from_terms([
            (x(&rs, &[2, 1]), &one() - &e(&rs, &[1, 1])),
            (s2.clone(), LaurentPolynomial::constant(-1)),
            (x(&rs, &[1]), -e(&rs, &[1, 0])),
        ]);
        assert_eq!(sln_si_leading(&rs, &s2, 1).unwrap(), expected);
        assert!(matches!(sln_si_leading(&rs, &x(&rs, &[1]), 1), Err(Error::PreconditionViolated(_))));
        let b2 = RootSystem::build('B', 2).unwrap();
        assert!(matches!(sln_si_leading(&b2, &b2.identity(), 1), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn sln_closed_form_matches_action() {
        for rank in [2, 3] {
            let rs = RootSystem::build('A', rank).unwrap();
            for w in rs.all_elements() {
                for i in 1..=rank {
                    if !rs.is_ascent(&w, i) {
                        continue;
                    }
                    let full = si_k(&rs, i, &KClass::basis(w.clone())).unwrap();
                    assert_eq!(full.part_at_least(w.length()), sln_si_leading(&rs, &w, i).unwrap(), "{w} s_{i}");
                }
            }
        }
    }
}
