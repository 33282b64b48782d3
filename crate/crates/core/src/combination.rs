//! Finite linear combinations of basis classes indexed by Weyl group elements.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::charring::{LaurentPolynomial, SymPolynomial};
use crate::weyl::WeylElement;

/// The coefficient rings used by [`Combination`].
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, rhs: &Self);
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coefficient for LaurentPolynomial {
    fn zero() -> Self {
        LaurentPolynomial::zero()
    }
    fn one() -> Self {
        LaurentPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPolynomial::is_zero(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coefficient for SymPolynomial {
    fn zero() -> Self {
        SymPolynomial::zero()
    }
    fn one() -> Self {
        SymPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        SymPolynomial::is_zero(self)
    }
    fn add_assign(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// `Σ c_ω·b_ω`, ordered by length and canonical word of `ω`. Zero
/// coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Combination<C> {
    terms: BTreeMap<WeylElement, C>,
}

impl<C: Coefficient> Default for Combination<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Combination<C> {
    pub fn zero() -> Self {
        Combination { terms: BTreeMap::new() }
    }

    /// The basis class `b_ω`.
    pub fn basis(w: WeylElement) -> Self {
        Self::term(w, C::one())
    }

    pub fn term(w: WeylElement, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(w, &c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (WeylElement, C)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &WeylElement) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &WeylElement> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: WeylElement, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(entry) => {
                entry.add_assign(c);
                if entry.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &c.mul(d));
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Extends a map on basis classes linearly over the coefficients.
    pub fn map_basis(&self, mut f: impl FnMut(&WeylElement) -> Self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Fallible version of [`Combination::map_basis`].
    pub fn map_linear<E>(&self, mut f: impl FnMut(&WeylElement) -> Result<Self, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&C) -> C) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Terms whose index has the given length.
    pub fn homogeneous_part(&self, length: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(w, _)| w.length() == length).map(|(w, c)| (w.clone(), c.clone())))
    }

    /// Terms whose index has length at least `length`.
    pub fn part_at_least(&self, length: usize) -> Self {
        Self::from_terms(self.terms.iter().filter(|(w, _)| w.length() >= length).map(|(w, c)| (w.clone(), c.clone())))
    }
}

impl<C: Coefficient> fmt::Debug for Combination<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c:?})*[{w}]")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> Add<&Combination<C>> for &Combination<C> {
    type Output = Combination<C>;
    fn add(self, rhs: &Combination<C>) -> Combination<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coefficient> Sub<&Combination<C>> for &Combination<C> {
    type Output = Combination<C>;
    fn sub(self, rhs: &Combination<C>) -> Combination<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one().neg());
        out
    }
}

impl<C: Coefficient> Neg for &Combination<C> {
    type Output = Combination<C>;
    fn neg(self) -> Combination<C> {
        self.map_coefficients(C::neg)
    }
}
