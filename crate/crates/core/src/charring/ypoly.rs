use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Polynomial in `y` with integer coefficients, stored densely from degree 0.
/// The zero polynomial has no coefficients; there are never trailing zeros.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct YPolynomial(Vec<i64>);

impl YPolynomial {
    pub fn zero() -> Self {
        YPolynomial(Vec::new())
    }

    pub fn one() -> Self {
        YPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        YPolynomial::from_coeffs(vec![c])
    }

    /// `c·y^k`.
    pub fn term(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        YPolynomial::from_coeffs(v)
    }

    pub fn y() -> Self {
        YPolynomial::term(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        YPolynomial(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// The constant term; for a constant polynomial this is its value.
    pub fn constant_term(&self) -> i64 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn evaluate(&self, y: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * y + c)
    }

    pub fn scale(&self, c: i64) -> Self {
        YPolynomial::from_coeffs(self.0.iter().map(|&a| a * c).collect())
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }
}

impl fmt::Debug for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y{:?}", self.0)
    }
}

impl From<i64> for YPolynomial {
    fn from(c: i64) -> Self {
        YPolynomial::constant(c)
    }
}

impl AddAssign<&YPolynomial> for YPolynomial {
    fn add_assign(&mut self, rhs: &YPolynomial) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
        self.trim();
    }
}

impl SubAssign<&YPolynomial> for YPolynomial {
    fn sub_assign(&mut self, rhs: &YPolynomial) {
        if self.0.len() < rhs.0.len() {
            self.0.resize(rhs.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
        self.trim();
    }
}

impl Add<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn add(self, rhs: &YPolynomial) -> YPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn sub(self, rhs: &YPolynomial) -> YPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&YPolynomial> for &YPolynomial {
    type Output = YPolynomial;
    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return YPolynomial::zero();
        }
        let mut out = vec![0; self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPolynomial::from_coeffs(out)
    }
}

impl Neg for &YPolynomial {
    type Output = YPolynomial;
    fn neg(self) -> YPolynomial {
        YPolynomial(self.0.iter().map(|c| -c).collect())
    }
}
