//! Matrices of linear operators on a basis indexed by the Weyl group.

use alloc::vec::Vec;

use crate::combination::{Coefficient, Combination};
use crate::weyl::WeylElement;

/// Square matrix indexed by `order × order`. Column `c` holds the image of the
/// basis class `order[c]`; `entries[r][c]` is its coefficient on `order[r]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ActionMatrix<C> {
    order: Vec<WeylElement>,
    entries: Vec<Vec<C>>,
}

impl<C: Coefficient> ActionMatrix<C> {
    /// `columns[c]` is the image of `order[c]`. Terms outside `order` are
    /// dropped.
    pub fn from_columns(order: Vec<WeylElement>, columns: &[Combination<C>]) -> Self {
        assert_eq!(order.len(), columns.len(), "one column per basis element");
        let entries = order.iter().map(|row| columns.iter().map(|col| col.coefficient(row)).collect()).collect();
        ActionMatrix { order, entries }
    }

    pub fn order(&self) -> &[WeylElement] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &C {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.entries
    }

    pub fn column(&self, col: usize) -> Combination<C> {
        Combination::from_terms(self.order.iter().zip(&self.entries).map(|(w, row)| (w.clone(), row[col].clone())))
    }

    fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.order.iter().position(|v| v == w)
    }

    /// Applies the matrix to a combination of basis classes.
    pub fn apply(&self, u: &Combination<C>) -> Combination<C> {
        u.map_basis(|w| match self.index_of(w) {
            Some(c) => self.column(c),
            None => Combination::zero(),
        })
    }

    /// `self · rhs`, both over the same ordered basis.
    pub fn compose(&self, rhs: &ActionMatrix<C>) -> ActionMatrix<C> {
        assert_eq!(self.order, rhs.order, "matrices over different bases");
        let n = self.size();
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut acc = C::zero();
                        for k in 0..n {
                            if !self.entries[r][k].is_zero() && !rhs.entries[k][c].is_zero() {
                                acc.add_assign(&self.entries[r][k].mul(&rhs.entries[k][c]));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ActionMatrix { order: self.order.clone(), entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(r, row)| row.iter().enumerate().all(|(c, e)| if r == c { *e == C::one() } else { e.is_zero() }))
    }

    /// Number of nonzero entries in column `col`.
    pub fn column_support(&self, col: usize) -> usize {
        self.entries.iter().filter(|row| !row[col].is_zero()).count()
    }
}
