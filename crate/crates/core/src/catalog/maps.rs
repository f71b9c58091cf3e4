use std::fmt;

use crate::derivations::TwoCochain;
use crate::error::Result;
use crate::exactlin::{q, Rational};

/// 0-based index of `X_i` (1-based `i` in `1..=6`).
pub(crate) const fn x(i: usize) -> usize {
    i - 1
}

/// 0-based index of `Y_i` (1-based).
pub(crate) const fn y(i: usize) -> usize {
    5 + i
}

/// The 2-cocycles of `g₀ⁿ` used to build the catalog. Indices are 1-based
/// and refer to `Y_1, ..., Y_{n-6}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CocycleMap {
    /// `ψ¹_{ij}(Y_i, Y_j) = X_6`.
    Psi1(usize, usize),
    /// `ψ_i^s(Y_i, X_l) = X_{l+s}` for `2 ≤ l ≤ 6-s`, with `s ∈ {2,3,4}`.
    Psi { s: usize, i: usize },
    /// `φ_{1,k}(X_5, X_2) = φ_{1,k}(X_3, X_4) = Y_k`.
    Phi1k(usize),
    /// `φ_{3,k}(X_3, X_2) = Y_k`.
    Phi3k(usize),
    /// `φ_1(X_5, X_2) = φ_1(X_3, X_4) = X_6`.
    Phi1,
    /// `φ_2(X_3, X_2) = X_5`, `φ_2(X_4, X_2) = X_6`.
    Phi2,
    /// `φ_3(X_3, X_2) = X_6`.
    Phi3,
}

impl CocycleMap {
    /// Nonzero values as 0-based `(a, b, target)` triples meaning
    /// `φ(X_a, X_b) = X_target`.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        match *self {
            CocycleMap::Psi1(i, j) => vec![(y(i), y(j), x(6))],
            CocycleMap::Psi { s, i } => (2..=6 - s).map(|l| (y(i), x(l), x(l + s))).collect(),
            CocycleMap::Phi1k(k) => vec![(x(5), x(2), y(k)), (x(3), x(4), y(k))],
            CocycleMap::Phi3k(k) => vec![(x(3), x(2), y(k))],
            CocycleMap::Phi1 => vec![(x(5), x(2), x(6)), (x(3), x(4), x(6))],
            CocycleMap::Phi2 => vec![(x(3), x(2), x(5)), (x(4), x(2), x(6))],
            CocycleMap::Phi3 => vec![(x(3), x(2), x(6))],
        }
    }

    /// Largest `Y` index referenced, 0 if none.
    pub fn max_y(&self) -> usize {
        match *self {
            CocycleMap::Psi1(i, j) => i.max(j),
            CocycleMap::Psi { i, .. } => i,
            CocycleMap::Phi1k(k) | CocycleMap::Phi3k(k) => k,
            CocycleMap::Phi1 | CocycleMap::Phi2 | CocycleMap::Phi3 => 0,
        }
    }

    /// Whether the map is defined on `g₀ⁿ`.
    pub fn fits(&self, n: usize) -> bool {
        n >= 7 && self.max_y() <= n - 6
    }

    /// Bracket entries `(a, b, target, coeff)` for adding `coeff · φ` to a law.
    pub fn entries(&self, coeff: &Rational) -> Vec<(usize, usize, usize, Rational)> {
        self.triples()
            .into_iter()
            .map(|(a, b, t)| (a, b, t, coeff.clone()))
            .collect()
    }

    pub fn to_cochain(&self, n: usize) -> Result<TwoCochain> {
        TwoCochain::from_entries(n, self.entries(&q(1)))
    }

    /// Every map defined on `g₀ⁿ`, in a fixed order.
    pub fn all_for(n: usize) -> Vec<CocycleMap> {
        let r = n.saturating_sub(6);
        let mut out = Vec::new();
        for i in 1..=r {
            for j in i + 1..=r {
                out.push(CocycleMap::Psi1(i, j));
            }
        }
        for s in 2..=4 {
            for i in 1..=r {
                out.push(CocycleMap::Psi { s, i });
            }
        }
        for k in 1..=r {
            out.push(CocycleMap::Phi1k(k));
        }
        for k in 1..=r {
            out.push(CocycleMap::Phi3k(k));
        }
        out.extend([CocycleMap::Phi1, CocycleMap::Phi2, CocycleMap::Phi3]);
        out
    }
}

impl fmt::Display for CocycleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleMap::Psi1(i, j) => write!(f, "psi1({i},{j})"),
            CocycleMap::Psi { s, i } => write!(f, "psi{s}({i})"),
            CocycleMap::Phi1k(k) => write!(f, "phi1k({k})"),
            CocycleMap::Phi3k(k) => write!(f, "phi3k({k})"),
            CocycleMap::Phi1 => f.write_str("phi1"),
            CocycleMap::Phi2 => f.write_str("phi2"),
            CocycleMap::Phi3 => f.write_str("phi3"),
        }
    }
}
