//! Weyl group elements, reduced words, Bruhat order and Demazure products.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem, Sign, Weight, MAX_RANK};

/// A word in the simple reflections; letters are 1-based simple indices.
/// Words need not be reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: impl Into<Vec<u8>>) -> Self {
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: u8) {
        self.0.push(letter);
    }

    /// The word with position `k` (1-based) removed.
    pub fn without(&self, k: usize) -> Word {
        let mut v = self.0.clone();
        v.remove(k - 1);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `1,2,1`, with the empty word written `e`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWordError;

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected comma-separated simple indices or `e`")
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts `e`, the empty string, or comma-separated positive indices.
    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::empty());
        }
        s.split(',')
            .map(|t| match t.trim().parse::<u8>() {
                Ok(l) if l > 0 => Ok(l),
                _ => Err(ParseWordError),
            })
            .collect::<core::result::Result<Vec<u8>, _>>()
            .map(Word)
    }
}

/// Matrix of a Weyl group element acting on fundamental-weight coordinates.
/// Padded with the identity past the rank.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct WeylMatrix([[i32; MAX_RANK]; MAX_RANK]);

impl WeylMatrix {
    pub(crate) const IDENTITY: WeylMatrix = {
        let mut m = [[0; MAX_RANK]; MAX_RANK];
        let mut i = 0;
        while i < MAX_RANK {
            m[i][i] = 1;
            i += 1;
        }
        WeylMatrix(m)
    };

    pub(crate) fn mul(&self, rhs: &WeylMatrix) -> WeylMatrix {
        let mut out = [[0; MAX_RANK]; MAX_RANK];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..MAX_RANK).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        WeylMatrix(out)
    }

    pub(crate) fn apply(&self, lambda: &Weight) -> Weight {
        let mut out = [0; MAX_RANK];
        for (i, cell) in out.iter_mut().enumerate() {
            *cell = (0..MAX_RANK).map(|k| self.0[i][k] * lambda[k]).sum();
        }
        Weight::new(&out)
    }
}

impl fmt::Debug for WeylMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// An element of the Weyl group: its matrix on the weight lattice together
/// with its lexicographically minimal reduced word.
#[derive(Clone)]
pub struct WeylElement {
    matrix: WeylMatrix,
    word: Word,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Lexicographically minimal reduced word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// `w(λ)`.
    pub fn act(&self, lambda: &Weight) -> Weight {
        self.matrix.apply(lambda)
    }

    /// Row-major entries of the `rank × rank` matrix.
    pub fn matrix_entries(&self, rank: usize) -> Vec<Vec<i32>> {
        self.matrix.0[..rank].iter().map(|row| row[..rank].to_vec()).collect()
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl core::hash::Hash for WeylElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

/// Ordered by length, then canonical word. Consistent with equality since the
/// canonical word is a function of the matrix.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{}]", self.word)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.word, f)
    }
}

impl RootSystem {
    pub(crate) fn simple_reflection_matrix(&self, i: usize) -> WeylMatrix {
        // s_i(λ) = λ − λ_i α_i
        let alpha = self.simple_root_weight(i);
        let mut m = WeylMatrix::IDENTITY;
        for (k, row) in m.0.iter_mut().enumerate().take(self.rank()) {
            row[i - 1] -= alpha[k];
        }
        m
    }

    fn matrix_length(&self, m: &WeylMatrix) -> usize {
        self.positive_roots().iter().filter(|beta| self.height_sign(&m.apply(&beta.weight())) == Sign::Negative).count()
    }

    /// Canonicalizes a matrix by peeling off the smallest left descent.
    pub(crate) fn element(&self, matrix: WeylMatrix) -> WeylElement {
        let mut word = Word::empty();
        let mut m = matrix;
        let mut len = self.matrix_length(&m);
        while len > 0 {
            let (i, next) = (1..=self.rank())
                .map(|i| (i, self.simple_reflection_matrix(i).mul(&m)))
                .find(|(_, next)| self.matrix_length(next) < len)
                .expect("non-identity element has a left descent");
            word.push(i as u8);
            m = next;
            len -= 1;
        }
        WeylElement { matrix, word }
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement { matrix: WeylMatrix::IDENTITY, word: Word::empty() }
    }

    pub(crate) fn check_word(&self, word: &Word) -> Result<()> {
        word.letters().iter().try_for_each(|&l| self.check_index(l as usize))
    }

    pub fn from_word(&self, word: &Word) -> Result<WeylElement> {
        self.check_word(word)?;
        let m =
            word.letters().iter().fold(WeylMatrix::IDENTITY, |m, &l| m.mul(&self.simple_reflection_matrix(l as usize)));
        Ok(self.element(m))
    }

    /// The simple reflection `s_i`. Panics on a bad index.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        assert!((1..=self.rank()).contains(&i), "simple index {i} out of range");
        WeylElement { matrix: self.simple_reflection_matrix(i), word: Word::new([i as u8]) }
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length()
    }

    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        w.word.clone()
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        self.element(a.matrix.mul(&b.matrix))
    }

    /// `w·s_i`.
    pub fn mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        self.element(w.matrix.mul(&self.simple_reflection_matrix(i)))
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        self.from_word(&w.word.reversed()).expect("canonical words are valid")
    }

    /// `ℓ(w·s_i) > ℓ(w)`, i.e. `w(α_i)` is positive.
    pub fn is_ascent(&self, w: &WeylElement, i: usize) -> bool {
        self.height_sign(&w.act(&self.simple_root_weight(i))) == Sign::Positive
    }

    /// `w(β)` as a root.
    pub fn act_root(&self, w: &WeylElement, beta: &Root) -> Root {
        self.root(&w.act(&beta.weight())).expect("Weyl group permutes roots")
    }

    /// The reflection `s_β`.
    pub fn reflection(&self, beta: &Root) -> WeylElement {
        let mut m = WeylMatrix::IDENTITY;
        let (b, c) = (beta.weight(), beta.coroot());
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                m.0[i][j] -= b[i] * c[j];
            }
        }
        self.element(m)
    }

    /// All elements, sorted by length then canonical word.
    pub fn all_elements(&self) -> Vec<WeylElement> {
        let gens: Vec<WeylMatrix> = (1..=self.rank()).map(|i| self.simple_reflection_matrix(i)).collect();
        let mut seen = BTreeSet::new();
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(WeylMatrix::IDENTITY);
        seen.insert(WeylMatrix::IDENTITY);
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let next = m.mul(g);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_iter().map(|m| self.element(m)).collect();
        out.sort();
        out
    }

    /// Longest element `w₀`.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        loop {
            match (1..=self.rank()).find(|&i| self.is_ascent(&w, i)) {
                Some(i) => w = self.mul_simple(&w, i),
                None => return w,
            }
        }
    }

    /// Every reduced word of `w`, sorted.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Word> {
        fn go(rs: &RootSystem, w: &WeylElement, memo: &mut BTreeMap<Word, Vec<Word>>) -> Vec<Word> {
            if w.is_identity() {
                return alloc::vec![Word::empty()];
            }
            if let Some(v) = memo.get(&w.word) {
                return v.clone();
            }
            let mut out = Vec::new();
            for i in 1..=rs.rank() {
                if !rs.is_ascent(w, i) {
                    for mut prefix in go(rs, &rs.mul_simple(w, i), memo) {
                        prefix.push(i as u8);
                        out.push(prefix);
                    }
                }
            }
            out.sort();
            memo.insert(w.word.clone(), out.clone());
            out
        }
        go(self, w, &mut BTreeMap::new())
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.from_word(word)?.length() == word.len())
    }

    /// Product in the 0-Hecke monoid: `x ← x·s_i` when that lengthens `x`.
    pub fn demazure_product(&self, word: &Word) -> Result<WeylElement> {
        self.check_word(word)?;
        let m = self.demazure_fold(word.letters().iter().map(|&l| l as usize));
        Ok(self.element(m))
    }

    pub(crate) fn demazure_fold(&self, letters: impl Iterator<Item = usize>) -> WeylMatrix {
        let mut m = WeylMatrix::IDENTITY;
        for i in letters {
            let image = m.apply(&self.simple_root_weight(i));
            if self.height_sign(&image) == Sign::Positive {
                m = m.mul(&self.simple_reflection_matrix(i));
            }
        }
        m
    }

    /// `s_i ⋆ x` in the 0-Hecke monoid: `s_i·x` when that lengthens `x`.
    pub(crate) fn demazure_left(&self, i: usize, m: &WeylMatrix) -> WeylMatrix {
        let p = self.simple_reflection_matrix(i).mul(m);
        if self.matrix_length(&p) > self.matrix_length(m) {
            p
        } else {
            *m
        }
    }

    /// Demazure product of the letters of `word` selected by `mask`.
    pub fn subword_mask(&self, word: &Word, mask: &[bool]) -> Result<WeylElement> {
        if mask.len() != word.len() {
            return Err(Error::BadMask { mask: mask.len(), word: word.len() });
        }
        self.check_word(word)?;
        let letters = word.letters().iter().zip(mask).filter(|(_, &keep)| keep).map(|(&l, _)| l as usize);
        Ok(self.element(self.demazure_fold(letters)))
    }

    /// For a reduced word and a position `k` (1-based), the positive root `β`
    /// with `w·s_β = w` with letter `k` removed: `β = s_{i_n}⋯s_{i_{k+1}}(α_{i_k})`.
    pub fn deletion_reflection(&self, word: &Word, k: usize) -> Result<Root> {
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced(word.clone()));
        }
        if k == 0 || k > word.len() {
            return Err(Error::PreconditionViolated("deletion position out of range"));
        }
        let letters = word.letters();
        let mut lambda = self.simple_root_weight(letters[k - 1] as usize);
        for &l in &letters[k..] {
            let s = self.simple_reflection_matrix(l as usize);
            lambda = s.apply(&lambda);
        }
        Ok(self.root(&lambda).expect("image of a simple root is a root"))
    }

    /// `C_i = {γ ≠ α_i positive : ℓ(ω s_i s_γ) = ℓ(ω), (α_i, γ) ≠ 0}` for an
    /// ascent `ℓ(ω s_i) > ℓ(ω)`.
    pub fn support_set_c(&self, w: &WeylElement, i: usize) -> Result<Vec<Root>> {
        self.check_index(i)?;
        if !self.is_ascent(w, i) {
            return Err(Error::PreconditionViolated("support set C_i needs an ascent"));
        }
        let alpha = self.simple_root(i);
        let wsi = self.mul_simple(w, i);
        Ok(self
            .positive_roots()
            .iter()
            .filter(|&gamma| *gamma != alpha)
            .filter(|gamma| self.inner_sign(&alpha.weight(), &gamma.weight()) != Sign::Zero)
            .filter(|gamma| self.mul(&wsi, &self.reflection(gamma)).length() == w.length())
            .copied()
            .collect())
    }

    /// Bruhat order, by the lifting property along the canonical word of `w`:
    /// with `s` the last letter, `u ≤ w` iff `us ≤ ws` (if `us < u`) or
    /// `u ≤ ws` (otherwise).
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        if u.length() > w.length() {
            return false;
        }
        if u.is_identity() {
            return true;
        }
        let s = *w.word.letters().last().expect("w is not the identity") as usize;
        let ws = self.mul_simple(w, s);
        if self.is_ascent(u, s) {
            self.bruhat_leq(u, &ws)
        } else {
            self.bruhat_leq(&self.mul_simple(u, s), &ws)
        }
    }
}
