//! Exact computations in the Hopf algebra of parking functions and the
//! family of algebras living inside or on top of it.
//!
//! The crate is organized around sparse linear combinations with rational
//! coefficients over typed basis keys:
//!
//! * [`words`] — parking functions, compositions, shuffles, bijections;
//! * [`coeffs`] — linear combinations, tensors, pairings, antipodes,
//!   primitive-space dimensions, and the generic bialgebra harness;
//! * [`pqsym`] — the parking-function algebra, its dual, the bidendriform
//!   and tridendriform splittings, and the internal product;
//! * [`realize`] — word-polynomial, plane-tree and 0/1-matrix models;
//! * [`sqsym`] — the Schröder algebra of parking quasi-ribbons;
//! * [`ncsf`] — a minimal noncommutative-symmetric-functions engine;
//! * [`cqsym`] — the Catalan algebra, its internal product over integer
//!   matrices, and the maps into `ncsf`;
//! * [`scqsym`] — the segmented-composition algebra of dimension `3^(n-1)`;
//! * [`series`] — truncated exact power series and the named generating
//!   functions, cross-checked against enumeration.

pub mod cqsym;
pub mod coeffs;
pub mod ncsf;
pub mod pqsym;
pub mod realize;
pub mod scqsym;
pub mod series;
pub mod sqsym;
pub mod words;
