//! Exact computations in the Calogero-Moser spaces `C_n`.
//!
//! A point of `C_n` is a simultaneous-conjugacy class of pairs `(X, Y)` of
//! `n x n` matrices such that `[X, Y] + I` has rank one. The automorphism
//! group of the Weyl algebra acts on these spaces through the generators
//! `Phi_p`, `Psi_q` and the scalings `R_lambda`. Everything here is exact over
//! the rationals.

pub mod automorphism;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod matrix;
pub mod point;
pub mod poly;
pub mod rational;
pub mod replay;

pub use automorphism::{AutoWord, Generator};
pub use conjugacy::{are_conjugate, ConjugacyVerdict, IntertwinerBasis, NotConjugateReason};
pub use error::{CmError, Result};
pub use matrix::Matrix;
pub use point::{
    base_point, diagonal_point, nilpotent_points, subdiag_point, CmPoint, SubdiagVector,
};
pub use poly::Polynomial;
pub use rational::Rational;
