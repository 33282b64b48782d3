//! Demazure–Lusztig operators and motivic Chern classes of Schubert cells.
//!
//! Setting `y = 0` gives the ideal sheaves `I_ω` of the boundaries; `y = −1`
//! gives the fixed-point classes `ι_ω`, whose restrictions are supported at
//! the single point `e_ω`.

use alloc::format;
use alloc::vec::Vec;

use crate::charring::{LaurentPolynomial, YPolynomial};
use crate::error::{Error, Result};
use crate::ktheory::{demazure_k, line_bundle_mult, si_k, KClass};
use crate::matrix::ActionMatrix;
use crate::rootsys::RootSystem;
use crate::weyl::{WeylElement, Word};

/// `T_i = ∂_i + y[L(α_i)]∂_i − id`.
pub fn dl_op(rs: &RootSystem, i: usize, u: &KClass) -> Result<KClass> {
    let d = demazure_k(rs, i, u)?;
    let yl = line_bundle_mult(rs, &rs.simple_root_weight(i), &d).map_coefficients(|c| c.scale(&YPolynomial::y()));
    Ok(&(&d + &yl) - u)
}

/// `MC_y(X_ω°)` for `ω = s_{i_1}⋯s_{i_n}`, built along the canonical word.
///
/// `∂_i` acts by right multiplication on the index, so the letters are
/// applied in order: `T_{i_n}(⋯T_{i_1}[O_id])`, and `T_i MC_y(X_ω°) =
/// MC_y(X_{ωs_i}°)` on ascents.
pub fn mc(rs: &RootSystem, w: &WeylElement) -> KClass {
    mc_along(rs, w.word()).expect("canonical words are reduced")
}

/// `MC_y(X_ω°)` along a given reduced word of `ω`.
pub fn mc_along(rs: &RootSystem, word: &Word) -> Result<KClass> {
    if !rs.is_reduced(word)? {
        return Err(Error::NotReduced(word.clone()));
    }
    let mut u = KClass::basis(rs.identity());
    for &l in word.letters() {
        u = dl_op(rs, l as usize, &u)?;
    }
    Ok(u)
}

/// Evaluates every coefficient at `y = v`.
pub fn specialize_y(u: &KClass, v: i64) -> KClass {
    u.map_coefficients(|c| c.specialize_y(v))
}

/// `I_ω = MC_0(X_ω°)`.
pub fn ideal_class(rs: &RootSystem, w: &WeylElement) -> KClass {
    specialize_y(&mc(rs, w), 0)
}

/// `ι_ω = MC_{−1}(X_ω°)`.
pub fn fixed_point_class(rs: &RootSystem, w: &WeylElement) -> KClass {
    specialize_y(&mc(rs, w), -1)
}

/// Which specialization of the motivic classes is used as a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotivicBasisKind {
    /// `y = 0`: ideal sheaves `I_ω`.
    Ideal,
    /// `y = −1`: fixed-point classes `ι_ω`.
    FixedPoint,
}

/// A basis `{b_ω}` of specialized motivic classes, each of the form
/// `b_ω = c_ω[O_ω] + (terms of shorter length)`.
#[derive(Clone, Debug)]
pub struct MotivicBasis {
    kind: MotivicBasisKind,
    order: Vec<WeylElement>,
    classes: Vec<KClass>,
}

impl MotivicBasis {
    pub fn new(rs: &RootSystem, kind: MotivicBasisKind) -> Self {
        let order = rs.all_elements();
        let v = match kind {
            MotivicBasisKind::Ideal => 0,
            MotivicBasisKind::FixedPoint => -1,
        };
        let classes = order.iter().map(|w| specialize_y(&mc(rs, w), v)).collect();
        MotivicBasis { kind, order, classes }
    }

    pub fn kind(&self) -> MotivicBasisKind {
        self.kind
    }

    pub fn order(&self) -> &[WeylElement] {
        &self.order
    }

    /// `b_ω` in the Schubert basis.
    pub fn class(&self, w: &WeylElement) -> &KClass {
        let k = self.order.iter().position(|v| v == w).expect("element of the Weyl group");
        &self.classes[k]
    }

    /// `Σ a_ω b_ω` in the Schubert basis, for coordinates `Σ a_ω [b_ω]`.
    pub fn to_schubert(&self, coords: &KClass) -> KClass {
        coords.map_basis(|w| self.class(w).clone())
    }

    /// Coordinates of a Schubert-basis class in this basis, by triangular
    /// elimination from the longest elements down.
    pub fn from_schubert(&self, u: &KClass) -> Result<KClass> {
        let mut rem = u.clone();
        let mut out = KClass::zero();
        for (w, b) in self.order.iter().zip(&self.classes).rev() {
            let r = rem.coefficient(w);
            if r.is_zero() {
                continue;
            }
            let a = r
                .div_exact(&b.coefficient(w))
                .ok_or_else(|| Error::NotInSpan(format!("coefficient of b_{w} is not a Laurent polynomial")))?;
            rem.add_scaled(b, &-&a);
            out.add_term(w.clone(), &a);
        }
        if !rem.is_zero() {
            return Err(Error::NotInSpan(format!("remainder {rem:?} after elimination")));
        }
        Ok(out)
    }

    /// Matrix of `s_i^K` in this basis; column `ω` holds the coordinates of
    /// `s_i^K(b_ω)`.
    pub fn action_matrix(&self, rs: &RootSystem, i: usize) -> Result<ActionMatrix<LaurentPolynomial>> {
        let columns = self.classes.iter().map(|b| self.from_schubert(&si_k(rs, i, b)?)).collect::<Result<Vec<_>>>()?;
        Ok(ActionMatrix::from_columns(self.order.clone(), &columns))
    }
}

/// Matrix of `s_i^K` in the basis of ideal sheaves `I_ω`.
pub fn ideal_basis_matrix(rs: &RootSystem, i: usize) -> Result<ActionMatrix<LaurentPolynomial>> {
    MotivicBasis::new(rs, MotivicBasisKind::Ideal).action_matrix(rs, i)
}

/// Matrix of `s_i^K` in the fixed-point basis `ι_ω`.
pub fn fixed_basis_matrix(rs: &RootSystem, i: usize) -> Result<ActionMatrix<LaurentPolynomial>> {
    MotivicBasis::new(rs, MotivicBasisKind::FixedPoint).action_matrix(rs, i)
}
