use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::YPolynomial;
use crate::rootsys::Weight;

/// Element of `R(T)[y] = Z[y][Ξ(T)]`: a finite sum of `c(y)·e^λ`.
///
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Weight, YPolynomial>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        LaurentPolynomial::term(Weight::ZERO, YPolynomial::constant(c))
    }

    /// `e^λ`.
    pub fn exp(lambda: Weight) -> Self {
        LaurentPolynomial::term(lambda, YPolynomial::one())
    }

    /// `c·e^λ`.
    pub fn term(lambda: Weight, c: YPolynomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(lambda, c);
        }
        LaurentPolynomial { terms }
    }

    /// `1 − e^λ`.
    pub fn one_minus_exp(lambda: Weight) -> Self {
        &LaurentPolynomial::one() - &LaurentPolynomial::exp(lambda)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, YPolynomial)>) -> Self {
        let mut out = LaurentPolynomial::zero();
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

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &YPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Weight) -> YPolynomial {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// True when every coefficient is a constant in `y`.
    pub fn is_y_free(&self) -> bool {
        self.terms.values().all(YPolynomial::is_constant)
    }

    /// The single monomial `c·e^λ`, if this is one.
    pub fn as_monomial(&self) -> Option<(Weight, &YPolynomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(w, c)| (*w, c))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, lambda: Weight, c: &YPolynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn sub_term(&mut self, lambda: Weight, c: &YPolynomial) {
        self.add_term(lambda, &-c);
    }

    /// Relabels monomials `e^λ ↦ e^{f(λ)}`.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Applies a monomial-wise linear map `e^λ ↦ g(λ)`, extended `Z[y]`-linearly.
    pub fn map_monomials(&self, g: impl Fn(&Weight) -> LaurentPolynomial) -> Self {
        let mut out = LaurentPolynomial::zero();
        for (w, c) in &self.terms {
            for (v, d) in g(w).terms() {
                out.add_term(*v, &(c * d));
            }
        }
        out
    }

    /// `e^μ·f`.
    pub fn shift(&self, mu: &Weight) -> Self {
        LaurentPolynomial { terms: self.terms.iter().map(|(w, c)| (*w + *mu, c.clone())).collect() }
    }

    pub fn scale(&self, c: &YPolynomial) -> Self {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(w, d)| (*w, c * d)))
    }

    /// Evaluates every coefficient at `y = v`.
    pub fn specialize_y(&self, v: i64) -> Self {
        LaurentPolynomial::from_terms(self.terms.iter().map(|(w, c)| (*w, YPolynomial::constant(c.evaluate(v)))))
    }

    /// Exact quotient by `1 − e^γ`, or `None` if it does not divide.
    ///
    /// The lattice splits into cosets of `Zγ`; on each coset the polynomial is
    /// `e^ρ·p(x)` with `x = e^γ`, divisible by `1 − x` iff `p(1) = 0`, with
    /// quotient coefficients the partial sums of `p`.
    pub fn div_one_minus_exp(&self, gamma: &Weight) -> Option<Self> {
        let j = gamma.as_array().iter().position(|&c| c != 0)?;
        let g = gamma[j];
        let mut strings: BTreeMap<Weight, BTreeMap<i32, YPolynomial>> = BTreeMap::new();
        for (mu, c) in &self.terms {
            let k = mu[j].div_euclid(g.abs()) * g.signum();
            let rep = *mu - k * *gamma;
            strings.entry(rep).or_default().insert(k, c.clone());
        }
        let mut out = LaurentPolynomial::zero();
        for (rep, string) in strings {
            let (&kmin, _) = string.first_key_value()?;
            let (&kmax, _) = string.last_key_value()?;
            let mut partial = YPolynomial::zero();
            for k in kmin..kmax {
                if let Some(c) = string.get(&k) {
                    partial += c;
                }
                out.add_term(rep + k * *gamma, &partial);
            }
            partial += &string[&kmax];
            if !partial.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Exact quotient `self / d` in `Z[y][Ξ]`, or `None` if `d` does not
    /// divide `self`.
    ///
    /// Long division under the lexicographic order on (weight, `y`-degree),
    /// which is compatible with addition of exponents.
    pub fn div_exact(&self, d: &LaurentPolynomial) -> Option<Self> {
        type Key = (Weight, usize);
        fn flatten(p: &LaurentPolynomial) -> BTreeMap<Key, i64> {
            let mut out = BTreeMap::new();
            for (w, c) in &p.terms {
                for (k, &a) in c.coeffs().iter().enumerate() {
                    if a != 0 {
                        out.insert((*w, k), a);
                    }
                }
            }
            out
        }
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPolynomial::zero());
        }
        let divisor: Vec<(Key, i64)> = flatten(d).into_iter().collect();
        let ((lead_w, lead_k), lead_c) = *divisor.last()?;
        let (low_w, low_k) = divisor[0].0;
        let mut rem = flatten(self);
        let (floor_w, floor_k) = *rem.keys().next()?;
        let mut quotient = LaurentPolynomial::zero();
        let cap = 100_000 + 16 * rem.len() * divisor.len();
        for _ in 0..cap {
            let Some((&(w, k), &c)) = rem.last_key_value() else {
                return Some(quotient);
            };
            if c % lead_c != 0 || k < lead_k {
                return None;
            }
            let (qw, qk, qc) = (w - lead_w, k - lead_k, c / lead_c);
            if (qw + low_w, qk + low_k) < (floor_w, floor_k) {
                return None;
            }
            quotient.add_term(qw, &YPolynomial::term(qc, qk));
            for &((dw, dk), dc) in &divisor {
                let key = (qw + dw, qk + dk);
                let entry = rem.entry(key).or_insert(0);
                *entry -= qc * dc;
                if *entry == 0 {
                    rem.remove(&key);
                }
            }
        }
        None
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c:?}*e{w:?}")?;
        }
        Ok(())
    }
}

impl From<i64> for LaurentPolynomial {
    fn from(c: i64) -> Self {
        LaurentPolynomial::constant(c)
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (w, c) in &rhs.terms {
            self.add_term(*w, c);
        }
    }
}

impl SubAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn sub_assign(&mut self, rhs: &LaurentPolynomial) {
        for (w, c) in &rhs.terms {
            self.sub_term(*w, c);
        }
    }
}

impl Add<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPolynomial> for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(*a + *b, &(c * d));
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect() }
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}
