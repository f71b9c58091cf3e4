//! Constructors for the algebras under study.
//!
//! * `g₀ⁿ`: `[X_1, X_{j-1}] = X_j` for `3 ≤ j ≤ 6`, with `Y_1..Y_{n-6}` central.
//! * `g^1..g^45`: `g₀ⁿ` plus a fixed list of cocycles from [`CocycleMap`],
//!   one table row per family.
//! * `g_m`, its factors `g_m / C^k g_m`, and the solvable extensions
//!   `r_{m,k}`, `s_{m,k}`.
//!
//! Catalog bases are `X_1, ..., X_6, Y_1, ..., Y_{n-6}` (0-based indices
//! `0..6` for the `X`s). A cocycle value such as `φ(X_5, X_2) = X_6` is added
//! as the bracket `[X_5, X_2] = X_6`.

mod families;
mod maps;
mod rigid;

pub use families::{
    build_family, family, list_families, yy_weights, CatalogEntry, CocycleTerm, Coefficient, GuardedSum, PairPattern,
    Parity, X1,
};
pub use maps::CocycleMap;
pub use rigid::{build_gm, build_gm_factor, build_rmk, build_smk, rmk_weights};

use crate::error::{Error, Result};
use crate::exactlin::{q, Rational};
use crate::liealg::LieAlgebra;

/// `X1..X6, Y1..Y_{n-6}`.
pub fn g0_labels(n: usize) -> Vec<String> {
    (1..=6)
        .map(|i| format!("X{i}"))
        .chain((1..=n.saturating_sub(6)).map(|i| format!("Y{i}")))
        .collect()
}

pub(crate) fn build_g0_entries() -> Vec<(usize, usize, usize, Rational)> {
    (3..=6).map(|j| (0, j - 2, j - 1, q(1))).collect()
}

pub fn build_g0(n: usize) -> Result<LieAlgebra> {
    if n < 7 {
        return Err(Error::DimensionTooSmall { n, min: 7 });
    }
    LieAlgebra::from_brackets(n, Some(g0_labels(n)), build_g0_entries())
}
