//! Finite crystallographic root systems in the weight lattice.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// Largest rank any supported root system can have.
pub const MAX_RANK: usize = 5;

/// Integer vector in fundamental-weight coordinates.
///
/// Entries past the rank of the ambient root system are zero. Coordinates are
/// 0-based: `λ[i]` is the pairing `⟨λ, α_{i+1}∨⟩`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight([i32; MAX_RANK]);

impl Weight {
    pub const ZERO: Weight = Weight([0; MAX_RANK]);

    /// Panics if `coords` is longer than [`MAX_RANK`].
    pub fn new(coords: &[i32]) -> Self {
        assert!(coords.len() <= MAX_RANK, "weight has more than {MAX_RANK} coordinates");
        let mut w = [0; MAX_RANK];
        w[..coords.len()].copy_from_slice(coords);
        Weight(w)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn as_array(&self) -> &[i32; MAX_RANK] {
        &self.0
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    pub fn dot(&self, other: &[i32; MAX_RANK]) -> i64 {
        self.0.iter().zip(other).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    pub(crate) fn set(&mut self, i: usize, v: i32) {
        self.0[i] = v;
    }
}

impl Index<usize> for Weight {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.0.iter().rposition(|&c| c != 0).map_or(0, |p| p + 1);
        f.debug_list().entries(&self.0[..len]).finish()
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, rhs: Weight) -> Weight {
        self += rhs;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, rhs: Weight) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, rhs: Weight) -> Weight {
        self -= rhs;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, rhs: Weight) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.map(|c| -c))
    }
}

impl Mul<Weight> for i32 {
    type Output = Weight;
    fn mul(self, rhs: Weight) -> Weight {
        Weight(rhs.0.map(|c| self * c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        match x {
            0 => Sign::Zero,
            x if x > 0 => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B2,
    C2,
    G2,
    D4,
}

impl CartanType {
    pub fn from_letter(letter: char, rank: usize) -> Result<Self> {
        match (letter.to_ascii_uppercase(), rank) {
            ('A', 1..=MAX_RANK) => Ok(CartanType::A(rank)),
            ('B', 2) => Ok(CartanType::B2),
            ('C', 2) => Ok(CartanType::C2),
            ('G', 2) => Ok(CartanType::G2),
            ('D', 4) => Ok(CartanType::D4),
            _ => Err(Error::UnsupportedType { letter, rank }),
        }
    }

    pub fn letter(self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B2 => 'B',
            CartanType::C2 => 'C',
            CartanType::G2 => 'G',
            CartanType::D4 => 'D',
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) => n,
            CartanType::B2 | CartanType::C2 | CartanType::G2 => 2,
            CartanType::D4 => 4,
        }
    }

    /// Order of `s_i s_j` in the Weyl group.
    pub fn coxeter_order(self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (c, d) = {
            let m = self.cartan();
            (m[i - 1][j - 1], m[j - 1][i - 1])
        };
        match c * d {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("not a finite type"),
        }
    }

    /// Cartan matrix with `C[i][j] = ⟨α_j, α_i∨⟩` (Bourbaki numbering).
    fn cartan(self) -> [[i32; MAX_RANK]; MAX_RANK] {
        let mut c = [[0; MAX_RANK]; MAX_RANK];
        let n = self.rank();
        for (i, row) in c.iter_mut().enumerate().take(n) {
            row[i] = 2;
        }
        match self {
            CartanType::A(n) => {
                for i in 0..n - 1 {
                    c[i][i + 1] = -1;
                    c[i + 1][i] = -1;
                }
            }
            // α₁ long, α₂ short
            CartanType::B2 => {
                c[0][1] = -1;
                c[1][0] = -2;
            }
            // α₁ short, α₂ long
            CartanType::C2 => {
                c[0][1] = -2;
                c[1][0] = -1;
            }
            // α₁ short, α₂ long
            CartanType::G2 => {
                c[0][1] = -3;
                c[1][0] = -1;
            }
            // 2 is the branch node
            CartanType::D4 => {
                for j in [0, 2, 3] {
                    c[1][j] = -1;
                    c[j][1] = -1;
                }
            }
        }
        c
    }

    fn symmetrizer(self) -> [i32; MAX_RANK] {
        let mut d = [0; MAX_RANK];
        d[..self.rank()].fill(1);
        match self {
            CartanType::B2 => d[0] = 2,
            CartanType::C2 => d[1] = 2,
            CartanType::G2 => d[1] = 3,
            _ => {}
        }
        d
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

/// A root, carrying its fundamental-weight coordinates together with its
/// simple-root coordinates and its coroot as a linear functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    weight: Weight,
    simple: Weight,
    coroot: Weight,
}

impl Root {
    pub fn weight(&self) -> Weight {
        self.weight
    }

    /// Coordinates in the basis of simple roots.
    pub fn simple_coords(&self) -> Weight {
        self.simple
    }

    /// `⟨λ, β∨⟩ = Σ_j coroot[j]·λ[j]`.
    pub fn coroot(&self) -> Weight {
        self.coroot
    }

    pub fn is_positive(&self) -> bool {
        self.simple.as_array().iter().sum::<i32>() > 0
    }

    pub fn height(&self) -> i32 {
        self.simple.as_array().iter().sum()
    }

    pub fn pairing(&self, lambda: &Weight) -> i64 {
        lambda.dot(self.coroot.as_array())
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root { weight: -self.weight, simple: -self.simple, coroot: -self.coroot }
    }
}

/// Cartan data of a supported finite type plus its positive roots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    cartan: [[i32; MAX_RANK]; MAX_RANK],
    symmetrizer: [i32; MAX_RANK],
    /// `adj(C)`, so that simple-root coordinates are `adj(C)·λ / det(C)`.
    adjugate: [[i64; MAX_RANK]; MAX_RANK],
    determinant: i64,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let rank = cartan_type.rank();
        let cartan = cartan_type.cartan();
        let symmetrizer = cartan_type.symmetrizer();
        let (determinant, adjugate) = adjugate(&cartan, rank);
        let mut rs =
            RootSystem { cartan_type, rank, cartan, symmetrizer, adjugate, determinant, positive_roots: Vec::new() };
        rs.positive_roots = rs.close_positive_roots();
        rs
    }

    pub fn build(letter: char, rank: usize) -> Result<Self> {
        Ok(Self::new(CartanType::from_letter(letter, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_entry(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.symmetrizer[..self.rank]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.rank).contains(&i) {
            Ok(())
        } else {
            Err(Error::BadIndex { index: i, rank: self.rank })
        }
    }

    /// The simple root `α_i` (1-based). Panics on a bad index.
    pub fn simple_root(&self, i: usize) -> Root {
        assert!((1..=self.rank).contains(&i), "simple index {i} out of range");
        let mut simple = Weight::ZERO;
        simple.set(i - 1, 1);
        self.root_from_simple_coords(simple)
    }

    pub fn simple_root_weight(&self, i: usize) -> Weight {
        let mut w = Weight::ZERO;
        for k in 0..self.rank {
            w.set(k, self.cartan[k][i - 1]);
        }
        w
    }

    /// Last positive root in height order.
    pub fn highest_root(&self) -> Root {
        *self.positive_roots.last().expect("root system has roots")
    }

    fn root_from_simple_coords(&self, simple: Weight) -> Root {
        let mut weight = Weight::ZERO;
        for k in 0..self.rank {
            let v: i32 = (0..self.rank).map(|j| self.cartan[k][j] * simple[j]).sum();
            weight.set(k, v);
        }
        // (β,β) = Σ_j β_j d_j m_j; coroot_j = 2 d_j m_j / (β,β)
        let norm: i32 = (0..self.rank).map(|j| weight[j] * self.symmetrizer[j] * simple[j]).sum();
        let mut coroot = Weight::ZERO;
        for j in 0..self.rank {
            let num = 2 * self.symmetrizer[j] * simple[j];
            debug_assert_eq!(num % norm, 0);
            coroot.set(j, num / norm);
        }
        Root { weight, simple, coroot }
    }

    /// Simple-root coordinates of `λ`, when they are integral.
    pub fn to_simple_coords(&self, lambda: &Weight) -> Option<Weight> {
        let mut out = Weight::ZERO;
        for i in 0..self.rank {
            let num: i64 = (0..self.rank).map(|j| self.adjugate[i][j] * lambda[j] as i64).sum();
            if num % self.determinant != 0 {
                return None;
            }
            out.set(i, (num / self.determinant) as i32);
        }
        Some(out)
    }

    /// Weight with the given simple-root coordinates.
    pub fn from_simple_coords(&self, simple: &Weight) -> Weight {
        let mut weight = Weight::ZERO;
        for k in 0..self.rank {
            weight.set(k, (0..self.rank).map(|j| self.cartan[k][j] * simple[j]).sum());
        }
        weight
    }

    /// Looks up the root (positive or negative) with the given weight.
    pub fn root(&self, weight: &Weight) -> Option<Root> {
        self.positive_roots.iter().find_map(|r| {
            if r.weight == *weight {
                Some(*r)
            } else if r.weight == -*weight {
                Some(-*r)
            } else {
                None
            }
        })
    }

    /// Sign of the height of `λ`, scaled by `det C > 0`. For a root this is
    /// its positivity.
    pub(crate) fn height_sign(&self, lambda: &Weight) -> Sign {
        let mut total = 0i64;
        for i in 0..self.rank {
            for j in 0..self.rank {
                total += self.adjugate[i][j] * lambda[j] as i64;
            }
        }
        Sign::of(total)
    }

    /// `⟨λ, β∨⟩ = 2(λ,β)/(β,β)`.
    pub fn pairing(&self, lambda: &Weight, beta: &Root) -> i64 {
        beta.pairing(lambda)
    }

    /// `s_β(λ) = λ − ⟨λ,β∨⟩β`.
    pub fn reflect(&self, lambda: &Weight, beta: &Root) -> Weight {
        let m = beta.pairing(lambda) as i32;
        *lambda - m * beta.weight
    }

    /// `det(C)·(α, β)` for the symmetrized form; `det(C) > 0`, so the sign
    /// is that of the form.
    fn scaled_inner(&self, alpha: &Weight, beta: &Weight) -> i64 {
        (0..self.rank)
            .map(|j| {
                let mj: i64 = (0..self.rank).map(|k| self.adjugate[j][k] * beta[k] as i64).sum();
                alpha[j] as i64 * self.symmetrizer[j] as i64 * mj
            })
            .sum()
    }

    /// Sign of `(α, β)`.
    pub fn inner_sign(&self, alpha: &Weight, beta: &Weight) -> Sign {
        Sign::of(self.scaled_inner(alpha, beta))
    }

    fn close_positive_roots(&self) -> Vec<Root> {
        let n = self.rank;
        let reflect_simple = |m: &Weight, i: usize| -> Weight {
            let p: i32 = (0..n).map(|j| self.cartan[i][j] * m[j]).sum();
            let mut out = *m;
            out.set(i, m[i] - p);
            out
        };
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut frontier: Vec<Weight> = (0..n)
            .map(|i| {
                let mut e = Weight::ZERO;
                e.set(i, 1);
                e
            })
            .collect();
        while let Some(m) = frontier.pop() {
            if !seen.insert(m) {
                continue;
            }
            for i in 0..n {
                let r = reflect_simple(&m, i);
                if !seen.contains(&r) {
                    frontier.push(r);
                }
            }
        }
        let mut positive: Vec<Weight> = seen.into_iter().filter(|m| m.as_array().iter().all(|&c| c >= 0)).collect();
        positive.sort_by_key(|m| (m.as_array().iter().sum::<i32>(), core::cmp::Reverse(*m)));
        positive.into_iter().map(|m| self.root_from_simple_coords(m)).collect()
    }
}

/// Determinant and adjugate of the leading `n×n` block, by cofactors.
fn adjugate(m: &[[i32; MAX_RANK]; MAX_RANK], n: usize) -> (i64, [[i64; MAX_RANK]; MAX_RANK]) {
    fn det(m: &[[i64; MAX_RANK]; MAX_RANK], rows: &[usize], cols: &[usize]) -> i64 {
        if rows.is_empty() {
            return 1;
        }
        let r = rows[0];
        let mut total = 0;
        for (k, &c) in cols.iter().enumerate() {
            if m[r][c] == 0 {
                continue;
            }
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            total += sign * m[r][c] * det(m, &rows[1..], &sub_cols);
        }
        total
    }
    let mut wide = [[0i64; MAX_RANK]; MAX_RANK];
    for (row, src) in wide.iter_mut().zip(m).take(n) {
        for (x, &y) in row.iter_mut().zip(src).take(n) {
            *x = y as i64;
        }
    }
    let all: Vec<usize> = (0..n).collect();
    let d = det(&wide, &all, &all);
    let mut adj = [[0i64; MAX_RANK]; MAX_RANK];
    for (i, row) in adj.iter_mut().enumerate().take(n) {
        for (j, entry) in row.iter_mut().enumerate().take(n) {
            // adj[i][j] = (-1)^{i+j} det(minor without row j, col i)
            let rows: Vec<usize> = all.iter().copied().filter(|&x| x != j).collect();
            let cols: Vec<usize> = all.iter().copied().filter(|&x| x != i).collect();
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *entry = sign * det(&wide, &rows, &cols);
        }
    }
    (d, adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_types() -> Vec<CartanType> {
        let mut v: Vec<CartanType> = (1..=5).map(CartanType::A).collect();
        v.extend([CartanType::B2, CartanType::C2, CartanType::G2, CartanType::D4]);
        v
    }

    #[test]
    fn cartan_invariants() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            let n = rs.rank();
            for i in 0..n {
                assert_eq!(rs.cartan_entry(i, i), 2);
                for j in 0..n {
                    if i != j {
                        assert!(rs.cartan_entry(i, j) <= 0);
                    }
                    let d = rs.symmetrizer();
                    assert_eq!(d[i] * rs.cartan_entry(i, j), d[j] * rs.cartan_entry(j, i), "{t}");
                }
            }
            assert!(rs.determinant > 0);
        }
    }

    #[test]
    fn positive_root_counts() {
        let expected = [
            (CartanType::A(1), 1),
            (CartanType::A(2), 3),
            (CartanType::A(3), 6),
            (CartanType::A(4), 10),
            (CartanType::A(5), 15),
            (CartanType::B2, 4),
            (CartanType::C2, 4),
            (CartanType::G2, 6),
            (CartanType::D4, 12),
        ];
        for (t, count) in expected {
            assert_eq!(RootSystem::new(t).positive_roots().len(), count, "{t}");
        }
    }

    #[test]
    fn a1_and_a2_roots() {
        let a1 = RootSystem::build('A', 1).unwrap();
        assert_eq!(a1.cartan_entry(0, 0), 2);
        assert_eq!(a1.positive_roots().len(), 1);
        assert_eq!(a1.positive_roots()[0].weight(), Weight::new(&[2]));

        let a2 = RootSystem::build('A', 2).unwrap();
        let simple: Vec<_> = a2.positive_roots().iter().map(|r| r.simple_coords()).collect();
        assert_eq!(simple, [Weight::new(&[1, 0]), Weight::new(&[0, 1]), Weight::new(&[1, 1])]);
    }

    #[test]
    fn b2_roots() {
        let rs = RootSystem::build('B', 2).unwrap();
        let simple: Vec<_> = rs.positive_roots().iter().map(|r| r.simple_coords()).collect();
        assert_eq!(simple, [Weight::new(&[1, 0]), Weight::new(&[0, 1]), Weight::new(&[1, 1]), Weight::new(&[1, 2])]);
        let g2 = RootSystem::build('G', 2).unwrap();
        assert_eq!(g2.highest_root().simple_coords(), Weight::new(&[3, 2]));
    }

    #[test]
    fn unsupported() {
        assert_eq!(RootSystem::build('E', 6).unwrap_err(), Error::UnsupportedType { letter: 'E', rank: 6 });
        assert!(RootSystem::build('A', 0).is_err());
        assert!(RootSystem::build('A', 6).is_err());
        assert!(RootSystem::build('B', 3).is_err());
    }

    #[test]
    fn pairing_examples() {
        let a2 = RootSystem::build('A', 2).unwrap();
        let a1 = a2.simple_root(1);
        let a2r = a2.simple_root(2);
        let high = a2.highest_root();
        assert_eq!(a2.pairing(&a1.weight(), &a1), 2);
        assert_eq!(a2.pairing(&a1.weight(), &a2r), -1);
        assert_eq!(a2.pairing(&high.weight(), &a1), 1);
        // simple coroot pairing is a coordinate lookup
        let lambda = Weight::new(&[3, -7]);
        assert_eq!(a2.pairing(&lambda, &a1), 3);
        assert_eq!(a2.pairing(&lambda, &a2r), -7);
    }

    #[test]
    fn coroots_non_simply_laced() {
        // In G2 the long root α₂ pairs with the short coroot α₁∨ to -3.
        let g2 = RootSystem::build('G', 2).unwrap();
        let (a1, a2) = (g2.simple_root(1), g2.simple_root(2));
        assert_eq!(g2.pairing(&a2.weight(), &a1), -3);
        assert_eq!(g2.pairing(&a1.weight(), &a2), -1);
        for beta in g2.positive_roots() {
            assert_eq!(g2.pairing(&beta.weight(), beta), 2);
        }
    }

    #[test]
    fn reflect_examples() {
        let a2 = RootSystem::build('A', 2).unwrap();
        let a1 = a2.simple_root(1);
        assert_eq!(a2.reflect(&a1.weight(), &a1), -a1.weight());
        assert_eq!(a2.reflect(&a2.simple_root(2).weight(), &a1), a2.highest_root().weight());
    }

    #[test]
    fn inner_sign_examples() {
        let a2 = RootSystem::build('A', 2).unwrap();
        let (a1, a2r, high) = (a2.simple_root(1).weight(), a2.simple_root(2).weight(), a2.highest_root().weight());
        assert_eq!(a2.inner_sign(&a1, &a1), Sign::Positive);
        assert_eq!(a2.inner_sign(&a1, &a2r), Sign::Negative);
        assert_eq!(a2.inner_sign(&a1, &high), Sign::Positive);
        assert_eq!(a2.inner_sign(&a1, &Weight::ZERO), Sign::Zero);
    }

    #[test]
    fn reflections_permute_roots() {
        for t in all_types() {
            let rs = RootSystem::new(t);
            for beta in rs.positive_roots() {
                for gamma in rs.positive_roots() {
                    let image = rs.reflect(&gamma.weight(), beta);
                    let r = rs.root(&image).expect("reflection of a root is a root");
                    assert_eq!(r.weight(), image);
                    // a simple reflection only changes the sign of its own root
                    if beta.height() == 1 {
                        assert_eq!(!r.is_positive(), gamma == beta, "{t}");
                    }
                    assert_eq!(rs.height_sign(&image) == Sign::Positive, r.is_positive());
                    assert_eq!(rs.pairing(&image, beta), -rs.pairing(&gamma.weight(), beta));
                }
            }
        }
    }

    #[test]
    fn simple_coords_round_trip() {
        let rs = RootSystem::build('A', 2).unwrap();
        // fundamental weight ϖ₁ = (2α₁+α₂)/3 is not in the root lattice
        assert_eq!(rs.to_simple_coords(&Weight::new(&[1, 0])), None);
        for beta in rs.positive_roots() {
            assert_eq!(rs.to_simple_coords(&beta.weight()), Some(beta.simple_coords()));
            assert_eq!(rs.from_simple_coords(&beta.simple_coords()), beta.weight());
        }
    }
}
