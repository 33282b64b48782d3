//! Exact symbolic computation of the Weyl-group action on the torus-equivariant
//! K-theory and cohomology of full flag varieties `G/B`.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: Laurent
//! polynomials over `Z[y]` for K-theory, polynomials over `Q` for cohomology.
//!
//! Conventions used throughout:
//!
//! * weights are integer vectors in fundamental-weight coordinates, so the
//!   pairing with the simple coroot `α_i∨` is the `i`-th coordinate;
//! * simple indices (letters of words, operator generators) are 1-based;
//! * `ω·s_i` is right multiplication, and Weyl matrices act on the left of
//!   weight vectors.

#![no_std]

extern crate alloc;

pub mod charring;
pub mod cohomology;
pub mod combination;
mod error;
pub mod ktheory;
pub mod matrix;
pub mod motivic;
pub mod rootsys;
pub mod weyl;

pub use charring::{LaurentPolynomial, SymPolynomial, YPolynomial};
pub use cohomology::CohClass;
pub use combination::Combination;
pub use error::{Error, Result};
pub use ktheory::{FixedPointVector, KClass, Localization};
pub use matrix::ActionMatrix;
pub use motivic::{MotivicBasis, MotivicBasisKind};
pub use rootsys::{CartanType, Root, RootSystem, Sign, Weight, MAX_RANK};
pub use weyl::{WeylElement, Word};
