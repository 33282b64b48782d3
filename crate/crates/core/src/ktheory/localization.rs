//! Restriction of K-classes to the torus-fixed points `e_w`, and back.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::KClass;
use crate::charring::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::WeylElement;

/// The values `κ|_w` of a class at every fixed point; zeros are not stored.
#[derive(Clone, PartialEq, Default)]
pub struct FixedPointVector {
    values: BTreeMap<WeylElement, LaurentPolynomial>,
}

impl FixedPointVector {
    pub fn zero() -> Self {
        FixedPointVector { values: BTreeMap::new() }
    }

    pub fn from_values(values: impl IntoIterator<Item = (WeylElement, LaurentPolynomial)>) -> Self {
        let mut out = FixedPointVector::zero();
        for (w, v) in values {
            out.add_at(w, &v);
        }
        out
    }

    pub fn get(&self, w: &WeylElement) -> LaurentPolynomial {
        self.values.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Points with a nonzero value.
    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.values.keys()
    }

    pub fn values(&self) -> impl Iterator<Item = (&WeylElement, &LaurentPolynomial)> {
        self.values.iter()
    }

    pub fn add_at(&mut self, w: WeylElement, v: &LaurentPolynomial) {
        if v.is_zero() {
            return;
        }
        let entry = self.values.entry(w.clone()).or_default();
        *entry += v;
        if entry.is_zero() {
            self.values.remove(&w);
        }
    }

    pub fn add_scaled(&mut self, other: &FixedPointVector, c: &LaurentPolynomial) {
        for (w, v) in &other.values {
            self.add_at(w.clone(), &(c * v));
        }
    }

    /// Pointwise product.
    pub fn pointwise_mul(&self, other: &FixedPointVector) -> FixedPointVector {
        FixedPointVector::from_values(self.values.iter().map(|(w, v)| (w.clone(), v * &other.get(w))))
    }

    pub fn scale(&self, c: &LaurentPolynomial) -> FixedPointVector {
        let mut out = FixedPointVector::zero();
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for FixedPointVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.values.iter()).finish()
    }
}

/// Restriction table of the Schubert basis for one root system.
///
/// `ρ[O_id]` is `Π_{β>0}(1 − e^β)` at `id`; every other row comes from its
/// prefix by the localized Demazure operator
/// `(∂f)_w = (f_w − e^{w(α_i)} f_{ws_i}) / (1 − e^{w(α_i)})`.
#[derive(Clone, Debug)]
pub struct Localization {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    table: BTreeMap<WeylElement, FixedPointVector>,
    /// Roots `γ` with `ρ[O_w]_w = Π (1 − e^γ)`.
    diagonal: BTreeMap<WeylElement, Vec<Weight>>,
}

impl Localization {
    /// Builds the table. Fails if any division in the recursion is inexact
    /// or a diagonal value is not the expected product.
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let elements = rs.all_elements();
        let mut loc = Localization {
            rs: rs.clone(),
            elements: elements.clone(),
            table: BTreeMap::new(),
            diagonal: BTreeMap::new(),
        };
        let euler = rs
            .positive_roots()
            .iter()
            .fold(LaurentPolynomial::one(), |acc, beta| &acc * &LaurentPolynomial::one_minus_exp(beta.weight()));
        loc.table.insert(rs.identity(), FixedPointVector::from_values([(rs.identity(), euler)]));
        for w in elements.iter().skip(1) {
            let i = *w.word().letters().last().expect("non-identity") as usize;
            let prefix = rs.mul_simple(w, i);
            let row = loc.demazure(i, &loc.table[&prefix]).map_err(|e| match e {
                Error::NotInSpan(msg) => Error::OracleInconsistency(format!("building [O_{w}]: {msg}")),
                e => e,
            })?;
            loc.table.insert(w.clone(), row);
        }
        for w in &elements {
            let factors: Vec<Weight> = rs
                .positive_roots()
                .iter()
                .map(|beta| w.act(&beta.weight()))
                .filter(|g| rs.root(g).is_some_and(|r| r.is_positive()))
                .collect();
            let product =
                factors.iter().fold(LaurentPolynomial::one(), |acc, g| &acc * &LaurentPolynomial::one_minus_exp(*g));
            if loc.table[w].get(w) != product {
                return Err(Error::OracleInconsistency(format!("unexpected diagonal value at {w}")));
            }
            loc.diagonal.insert(w.clone(), factors);
        }
        Ok(loc)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// `ρ[O_w]`.
    pub fn schubert(&self, w: &WeylElement) -> &FixedPointVector {
        &self.table[w]
    }

    pub fn restrict(&self, u: &KClass) -> FixedPointVector {
        let mut out = FixedPointVector::zero();
        for (w, c) in u.terms() {
            out.add_scaled(&self.table[w], c);
        }
        out
    }

    /// Inverse of [`Localization::restrict`], by elimination from the longest
    /// elements down.
    pub fn expand(&self, v: &FixedPointVector) -> Result<KClass> {
        let mut rem = v.clone();
        let mut out = KClass::zero();
        for w in self.elements.iter().rev() {
            let r = rem.get(w);
            if r.is_zero() {
                continue;
            }
            let mut a = r;
            for g in &self.diagonal[w] {
                a = a
                    .div_one_minus_exp(g)
                    .ok_or_else(|| Error::NotInSpan(format!("coefficient of [O_{w}] is not a Laurent polynomial")))?;
            }
            rem.add_scaled(&self.table[w], &-&a);
            out.add_term(w.clone(), &a);
        }
        debug_assert!(rem.is_zero());
        Ok(out)
    }

    /// Restriction of `[L(α)]`: `e^{w(α)}` at `w`.
    pub fn line_bundle(&self, alpha: &Weight) -> FixedPointVector {
        FixedPointVector::from_values(self.elements.iter().map(|w| (w.clone(), LaurentPolynomial::exp(w.act(alpha)))))
    }

    /// The Demazure operator `∂_i` on restrictions.
    pub fn demazure(&self, i: usize, f: &FixedPointVector) -> Result<FixedPointVector> {
        self.rs.check_index(i)?;
        let alpha = self.rs.simple_root_weight(i);
        let mut out = FixedPointVector::zero();
        for w in &self.elements {
            let gamma = w.act(&alpha);
            let other = f.get(&self.rs.mul_simple(w, i));
            let num = &f.get(w) - &other.shift(&gamma);
            if num.is_zero() {
                continue;
            }
            let q = num
                .div_one_minus_exp(&gamma)
                .ok_or_else(|| Error::NotInSpan(format!("localized Demazure division is inexact at {w}")))?;
            out.add_at(w.clone(), &q);
        }
        Ok(out)
    }

    /// Product of two classes, computed pointwise.
    pub fn multiply(&self, a: &KClass, b: &KClass) -> Result<KClass> {
        self.expand(&self.restrict(a).pointwise_mul(&self.restrict(b)))
    }

    /// True if every `ρ[O_w]` vanishes off the Bruhat interval below `w` and
    /// not at `w` itself.
    pub fn is_bruhat_triangular(&self) -> bool {
        self.elements
            .iter()
            .all(|w| self.table[w].support().all(|v| self.rs.bruhat_leq(v, w)) && !self.table[w].get(w).is_zero())
    }
}
