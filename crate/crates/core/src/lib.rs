//! Exact verification of nilpotent Lie algebras given by structure constants.
//!
//! The crate instantiates the 2-abelian `(n-5)`-filiform families `g^1..g^45`,
//! the `(m-1)`-abelian family `g_m` and its solvable extensions, and checks
//! their claimed invariants with exact rational arithmetic. It also analyses
//! parabolic nilradicals of `E6` through root combinatorics.
//!
//! Modules, bottom up:
//!
//! * [`exactlin`]: rationals, matrices, subspaces in canonical echelon form,
//!   Jordan types of nilpotent operators.
//! * [`liealg`]: structure-constant Lie algebras, central series,
//!   characteristic sequences, commutativity index, quotients.
//! * [`derivations`]: derivation algebras, characteristic nilpotence, weight
//!   systems, 2-cocycles with adjoint coefficients.
//! * [`catalog`]: constructors for every family.
//! * [`e6roots`]: the `E6` root system and `Δ₁`-height layers.

pub mod catalog;
pub mod derivations;
pub mod e6roots;
pub mod error;
pub mod exactlin;
pub mod liealg;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Partition, Rational, Subspace};
pub use liealg::LieAlgebra;
