//! Exact arithmetic in `R(T)[y]` and `S = Sym_Q Ξ(T)`, and the operators on
//! them: the Weyl action, divided differences and the operators `T_β^ε`.

mod laurent;
mod sym;
mod ypoly;

pub use laurent::LaurentPolynomial;
pub use sym::{Exponents, SymPolynomial};
pub use ypoly::YPolynomial;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Weight, MAX_RANK};
use crate::weyl::WeylElement;

/// `e^λ ↦ e^{w(λ)}`.
pub fn weyl_act_lp(w: &WeylElement, f: &LaurentPolynomial) -> LaurentPolynomial {
    f.map_weights(|lambda| w.act(lambda))
}

/// Isobaric divided difference `(f − e^{α_i} s_i(f)) / (1 − e^{α_i})`,
/// evaluated by its closed form on each monomial.
pub fn isobaric_dd(rs: &RootSystem, i: usize, f: &LaurentPolynomial) -> LaurentPolynomial {
    let alpha = rs.simple_root_weight(i);
    f.map_monomials(|lambda| {
        let m = lambda[i - 1];
        if m <= 0 {
            LaurentPolynomial::from_terms((0..=-m).map(|k| (*lambda + k * alpha, YPolynomial::one())))
        } else {
            LaurentPolynomial::from_terms((1..m).map(|k| (*lambda - k * alpha, YPolynomial::constant(-1))))
        }
    })
}

/// `T_β^1(e^λ) = e^{s_β λ}`; `T_β^0` sums the `β`-string from `λ` towards
/// `s_β λ` and is zero when `⟨λ, β∨⟩ = 0`.
pub fn t_operator(beta: &Root, epsilon: bool, f: &LaurentPolynomial) -> LaurentPolynomial {
    let b = beta.weight();
    if epsilon {
        return f.map_weights(|lambda| *lambda - (beta.pairing(lambda) as i32) * b);
    }
    f.map_monomials(|lambda| t_zero_monomial(lambda, &b, beta.pairing(lambda)))
}

pub(crate) fn t_zero_monomial(lambda: &Weight, beta: &Weight, m: i64) -> LaurentPolynomial {
    let m = m as i32;
    if m > 0 {
        LaurentPolynomial::from_terms((0..m).map(|k| (*lambda - k * *beta, YPolynomial::one())))
    } else {
        LaurentPolynomial::from_terms((1..=-m).map(|k| (*lambda + k * *beta, YPolynomial::constant(-1))))
    }
}

fn variable_images(rs: &RootSystem, w: &WeylElement) -> Vec<SymPolynomial> {
    (0..MAX_RANK)
        .map(|j| {
            let mut unit = [0; MAX_RANK];
            unit[j] = 1;
            let image = if j < rs.rank() { w.act(&Weight::new(&unit)) } else { Weight::new(&unit) };
            SymPolynomial::linear(&image)
        })
        .collect()
}

/// The ring automorphism of `S` induced by `w` on linear forms.
pub fn weyl_act_sym(rs: &RootSystem, w: &WeylElement, f: &SymPolynomial) -> SymPolynomial {
    f.substitute(&variable_images(rs, w))
}

/// `(f − s_i(f)) / (−α_i)`.
pub fn divided_diff_coh(rs: &RootSystem, i: usize, f: &SymPolynomial) -> Result<SymPolynomial> {
    rs.check_index(i)?;
    let si = rs.simple_reflection(i);
    let numerator = f - &weyl_act_sym(rs, &si, f);
    let divisor = SymPolynomial::linear(&-rs.simple_root_weight(i));
    numerator.div_exact_linear(&divisor).ok_or(Error::InternalError("f − s_i(f) is not divisible by α_i"))
}
