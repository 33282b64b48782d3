use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;

use crate::rootsys::{Weight, MAX_RANK};

/// Exponent vector over the fundamental-weight variables `x_1, …, x_n`.
pub type Exponents = [u16; MAX_RANK];

/// Element of `S = Sym_Q Ξ(T)`: a polynomial over `Q` in the fundamental
/// weights. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymPolynomial {
    terms: BTreeMap<Exponents, Rational64>,
}

impl SymPolynomial {
    pub fn zero() -> Self {
        SymPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        SymPolynomial::constant(Rational64::from_integer(1))
    }

    pub fn constant(c: Rational64) -> Self {
        SymPolynomial::from_terms([([0; MAX_RANK], c)])
    }

    pub fn integer(c: i64) -> Self {
        SymPolynomial::constant(Rational64::from_integer(c))
    }

    /// The linear form `λ = Σ λ_i x_i`.
    pub fn linear(lambda: &Weight) -> Self {
        SymPolynomial::from_terms((0..MAX_RANK).map(|i| {
            let mut e = [0; MAX_RANK];
            e[i] = 1;
            (e, Rational64::from_integer(lambda[i] as i64))
        }))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, Rational64)>) -> Self {
        let mut out = SymPolynomial::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational64)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational64) {
        if c == Rational64::from_integer(0) {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(|| Rational64::from_integer(0));
        *entry += c;
        if *entry == Rational64::from_integer(0) {
            self.terms.remove(&e);
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&k| k as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: Rational64) -> Self {
        SymPolynomial::from_terms(self.terms.iter().map(|(e, d)| (*e, *d * c)))
    }

    fn pow(&self, k: u16) -> Self {
        (0..k).fold(SymPolynomial::one(), |acc, _| &acc * self)
    }

    /// Substitutes the variable `x_j` by `images[j]`.
    pub fn substitute(&self, images: &[SymPolynomial]) -> Self {
        let mut out = SymPolynomial::zero();
        for (e, c) in &self.terms {
            let mut m = SymPolynomial::constant(*c);
            for (j, &k) in e.iter().enumerate() {
                if k > 0 {
                    m = &m * &images[j].pow(k);
                }
            }
            out += &m;
        }
        out
    }

    /// Exact quotient by a nonzero linear form, or `None`.
    pub fn div_exact_linear(&self, divisor: &SymPolynomial) -> Option<Self> {
        let (&lead_e, &lead_c) = divisor.terms.last_key_value()?;
        let p = lead_e.iter().position(|&k| k == 1)?;
        if lead_e.iter().map(|&k| k as u32).sum::<u32>() != 1 || !divisor.is_homogeneous() {
            return None;
        }
        let divisor_terms: Vec<(Exponents, Rational64)> = divisor.terms.iter().map(|(e, c)| (*e, *c)).collect();
        let mut rem = self.clone();
        let mut quotient = SymPolynomial::zero();
        while let Some((&e, &c)) = rem.terms.last_key_value() {
            if e[p] == 0 {
                return None;
            }
            let mut qe = e;
            qe[p] -= 1;
            let qc = c / lead_c;
            quotient.add_term(qe, qc);
            for (de, dc) in &divisor_terms {
                let mut m = qe;
                for (a, b) in m.iter_mut().zip(de) {
                    *a += b;
                }
                rem.add_term(m, -(qc * dc));
            }
        }
        Some(quotient)
    }
}

impl fmt::Debug for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*x{e:?}")?;
        }
        Ok(())
    }
}

impl AddAssign<&SymPolynomial> for SymPolynomial {
    fn add_assign(&mut self, rhs: &SymPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, *c);
        }
    }
}

impl SubAssign<&SymPolynomial> for SymPolynomial {
    fn sub_assign(&mut self, rhs: &SymPolynomial) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -*c);
        }
    }
}

impl Add<&SymPolynomial> for &SymPolynomial {
    type Output = SymPolynomial;
    fn add(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SymPolynomial> for &SymPolynomial {
    type Output = SymPolynomial;
    fn sub(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&SymPolynomial> for &SymPolynomial {
    type Output = SymPolynomial;
    fn mul(self, rhs: &SymPolynomial) -> SymPolynomial {
        let mut out = SymPolynomial::zero();
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                let mut e = *a;
                for (x, y) in e.iter_mut().zip(b) {
                    *x += y;
                }
                out.add_term(e, *c * *d);
            }
        }
        out
    }
}

impl Neg for &SymPolynomial {
    type Output = SymPolynomial;
    fn neg(self) -> SymPolynomial {
        SymPolynomial { terms: self.terms.iter().map(|(e, c)| (*e, -*c)).collect() }
    }
}
