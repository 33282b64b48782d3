//! Equivariant cohomology of `G/B` in the Schubert basis `[X_ω]` over
//! `S = H_T^*(pt)`.

use crate::charring::SymPolynomial;
use crate::combination::Combination;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// `Σ f_ω [X_ω]` with `f_ω ∈ S`.
pub type CohClass = Combination<SymPolynomial>;

/// BGG operator: `[X_ω] ↦ [X_{ωs_i}]` on ascents and `0` on descents,
/// extended `S`-linearly.
pub fn bgg(rs: &RootSystem, i: usize, c: &CohClass) -> Result<CohClass> {
    rs.check_index(i)?;
    c.map_linear(|w| Ok(if rs.is_ascent(w, i) { CohClass::basis(rs.mul_simple(w, i)) } else { CohClass::zero() }))
}

/// Multiplication by `c₁(L(α))`:
/// `[X_ω] ↦ ω(α)[X_ω] − Σ ⟨α, β∨⟩[X_{ωs_β}]` over positive `β` with
/// `ℓ(ωs_β) = ℓ(ω) − 1`.
pub fn chevalley_coh(rs: &RootSystem, alpha: &Weight, c: &CohClass) -> CohClass {
    c.map_basis(|w| {
        let mut out = CohClass::term(w.clone(), SymPolynomial::linear(&w.act(alpha)));
        if w.length() == 0 {
            return out;
        }
        for beta in rs.positive_roots() {
            let m = rs.pairing(alpha, beta);
            if m == 0 {
                continue;
            }
            let wsb = rs.mul(w, &rs.reflection(beta));
            if wsb.length() + 1 == w.length() {
                out.add_term(wsb, &SymPolynomial::integer(-m));
            }
        }
        out
    })
}

/// `s_i^{coh} = id + c₁(L(α_i))∘∂_i`.
pub fn si_coh(rs: &RootSystem, i: usize, c: &CohClass) -> Result<CohClass> {
    let d = bgg(rs, i, c)?;
    let out = c + &chevalley_coh(rs, &rs.simple_root_weight(i), &d);
    if out.terms().any(|(_, f)| !f.is_integral()) {
        return Err(Error::InternalError("non-integral Schubert coefficient"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{WeylElement, Word};

    fn x(rs: &RootSystem, w: &[u8]) -> WeylElement {
        rs.from_word(&Word::new(w)).unwrap()
    }

    fn lin(rs: &RootSystem, simple: &[i32]) -> SymPolynomial {
        SymPolynomial::linear(&rs.from_simple_coords(&Weight::new(simple)))
    }

    #[test]
    fn bgg_rule() {
        let rs = RootSystem::build('A', 2).unwrap();
        let id = CohClass::basis(rs.identity());
        assert_eq!(bgg(&rs, 2, &id).unwrap(), CohClass::basis(x(&rs, &[2])));
        assert!(bgg(&rs, 1, &CohClass::basis(x(&rs, &[1]))).unwrap().is_zero());
        let f = lin(&rs, &[1, 1]);
        assert_eq!(bgg(&rs, 1, &id.scale(&f)).unwrap(), CohClass::term(x(&rs, &[1]), f));
        assert_eq!(bgg(&rs, 0, &id).unwrap_err(), Error::BadIndex { index: 0, rank: 2 });
    }

    #[test]
    fn chevalley_examples() {
        let a1 = RootSystem::build('A', 1).unwrap();
        let alpha = a1.simple_root_weight(1);
        let s1 = x(&a1, &[1]);
        assert_eq!(
            chevalley_coh(&a1, &alpha, &CohClass::basis(a1.identity())),
            CohClass::term(a1.identity(), SymPolynomial::linear(&alpha))
        );
        let expected = CohClass::from_terms([
            (s1.clone(), SymPolynomial::linear(&-alpha)),
            (a1.identity(), SymPolynomial::integer(-2)),
        ]);
        assert_eq!(chevalley_coh(&a1, &alpha, &CohClass::basis(s1)), expected);

        let a2 = RootSystem::build('A', 2).unwrap();
        let s1 = x(&a2, &[1]);
        let got = chevalley_coh(&a2, &a2.simple_root_weight(2), &CohClass::basis(s1.clone()));
        let expected = CohClass::from_terms([(s1, lin(&a2, &[1, 1])), (a2.identity(), SymPolynomial::integer(1))]);
        assert_eq!(got, expected);
    }

    #[test]
    fn si_coh_in_rank_one() {
        let rs = RootSystem::build('A', 1).unwrap();
        let s1 = x(&rs, &[1]);
        let id = CohClass::basis(rs.identity());
        // s(X_id) = −X_id − α₁·X_{s₁}
        let expected = CohClass::from_terms([
            (rs.identity(), SymPolynomial::integer(-1)),
            (s1.clone(), SymPolynomial::linear(&-rs.simple_root_weight(1))),
        ]);
        let once = si_coh(&rs, 1, &id).unwrap();
        assert_eq!(once, expected);
        assert_eq!(si_coh(&rs, 1, &once).unwrap(), id);
        assert_eq!(si_coh(&rs, 1, &CohClass::basis(s1.clone())).unwrap(), CohClass::basis(s1));
    }

    #[test]
    fn involution_and_braid() {
        for (letter, rank) in [('A', 2), ('A', 3), ('B', 2), ('C', 2), ('G', 2)] {
            let rs = RootSystem::build(letter, rank).unwrap();
            for w in rs.all_elements() {
                let c = CohClass::basis(w);
                for i in 1..=rank {
                    let twice = si_coh(&rs, i, &si_coh(&rs, i, &c).unwrap()).unwrap();
                    assert_eq!(twice, c, "{letter}{rank} s_{i}");
                    assert!(bgg(&rs, i, &bgg(&rs, i, &c).unwrap()).unwrap().is_zero());
                }
                let m = rs.cartan_type().coxeter_order(1, 2);
                let mut v = c.clone();
                for k in 0..2 * m {
                    v = si_coh(&rs, 1 + k % 2, &v).unwrap();
                }
                assert_eq!(v, c, "{letter}{rank} braid");
            }
        }
    }

    #[test]
    fn chevalley_raises_degree_by_one() {
        let rs = RootSystem::build('B', 2).unwrap();
        let alpha = Weight::new(&[3, -1]);
        for w in rs.all_elements() {
            for (v, f) in chevalley_coh(&rs, &alpha, &CohClass::basis(w.clone())).terms() {
                // the coefficient degree makes up the change in codimension
                let expected = v.length() + 1 - w.length();
                assert!(f.is_homogeneous());
                assert_eq!(f.degree(), Some(expected as u32));
            }
        }
    }
}
