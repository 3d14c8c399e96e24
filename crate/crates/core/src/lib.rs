//! Exact expansion of affine Stanley symmetric functions into affine Schur
//! functions and of cylindric skew Schur functions into cylindric Schur
//! functions, with brute-force oracles and Gromov-Witten invariants of the
//! Grassmannian read off as degree-zero coefficients.

pub mod affine;
pub mod cylindric;
pub mod enumerate;
pub mod error;
pub mod nilcoxeter;
pub mod par;
pub mod stanley;
pub mod suites;
pub mod symfunc;

pub use affine::{AffinePermutation, CyclicSet, Direction, GeneratorWord, KBoundedPartition, Side};
pub use error::{Error, Result};
pub use symfunc::{Partition, SchurExpansion, SymmetricPolynomial};
