use super::maps::{x, y, CocycleMap};
use super::{build_g0_entries, g0_labels};
use crate::error::{Error, Result};
use crate::exactlin::{q, Rational};
use crate::liealg::LieAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn dim(self, m: usize) -> usize {
        match self {
            Parity::Even => 2 * m,
            Parity::Odd => 2 * m + 1,
        }
    }

    pub fn matches(self, n: usize) -> bool {
        n.is_multiple_of(2) == (self == Parity::Even)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    One,
    Alpha,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CocycleTerm {
    pub map: CocycleMap,
    pub coeff: Coefficient,
}

/// Index pairs `(i, j)` of the `ψ¹_{ij}` summands, as functions of `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairPattern {
    /// `(2t-1, 2t)`.
    OddEven,
    /// `(2t, 2t+1)`.
    EvenOdd,
    /// `(2t+1, 2t+2)`.
    Shifted,
}

impl PairPattern {
    pub fn pair(self, t: usize) -> (usize, usize) {
        match self {
            PairPattern::OddEven => (2 * t - 1, 2 * t),
            PairPattern::EvenOdd => (2 * t, 2 * t + 1),
            PairPattern::Shifted => (2 * t + 1, 2 * t + 2),
        }
    }
}

/// `Σ_{t=start}^{m-offset} ψ¹_{pattern(t)}`, present only when `m > guard`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GuardedSum {
    pub start: usize,
    pub guard: Option<usize>,
    pub offset: usize,
    pub pattern: PairPattern,
}

impl GuardedSum {
    pub fn pairs(&self, m: usize) -> Vec<(usize, usize)> {
        if self.guard.is_some_and(|g| m <= g) || m < self.offset {
            return Vec::new();
        }
        (self.start..=m - self.offset).map(|t| self.pattern.pair(t)).collect()
    }
}

/// One of the 45 families `g^1..g^45` of 2-abelian `(n-5)`-filiform laws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: usize,
    pub parity: Parity,
    pub min_m: usize,
    /// Terms added to `g₀ⁿ` at every admissible dimension.
    pub terms: &'static [CocycleTerm],
    pub guarded_sum: GuardedSum,
    /// Expected `dim C¹g`.
    pub expected_derived_dim: usize,
    /// Dimensions at which the family is listed as characteristically
    /// nilpotent (for every nonzero `α` where applicable).
    pub claimed_cn_dims: &'static [usize],
}

impl CatalogEntry {
    pub fn takes_alpha(&self) -> bool {
        self.terms.iter().any(|t| t.coeff == Coefficient::Alpha)
    }

    pub fn is_admissible(&self, n: usize) -> bool {
        n >= 7 && self.parity.matches(n) && n / 2 >= self.min_m
    }

    /// Admissible dimensions in `lo..=hi`.
    pub fn dims(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..=hi).filter(|&n| self.is_admissible(n)).collect()
    }

    pub fn claimed_cn(&self, n: usize) -> bool {
        self.claimed_cn_dims.contains(&n)
    }

    /// Fixed terms followed by the guarded `ψ¹` summands at dimension `n`.
    pub fn instance_terms(&self, n: usize) -> Vec<CocycleTerm> {
        let mut out = self.terms.to_vec();
        out.extend(self.guarded_sum.pairs(n / 2).into_iter().map(|(i, j)| CocycleTerm {
            map: CocycleMap::Psi1(i, j),
            coeff: Coefficient::One,
        }));
        out
    }

    /// Pairs `(i, j)` such that `ψ¹_{ij}` occurs and no `φ_{1,k}`, `φ_{3,k}`
    /// or `ψ_k^s` occurs for `k ∈ {i, j}`.
    /// For each, `d(Y_i) = Y_i`, `d(Y_j) = -Y_j` is a derivation.
    pub fn semisimple_pairs(&self, n: usize) -> Vec<(usize, usize)> {
        let terms = self.instance_terms(n);
        let touches = |k: usize| {
            terms.iter().any(|t| {
                matches!(t.map, CocycleMap::Phi1k(a) | CocycleMap::Phi3k(a) | CocycleMap::Psi { i: a, .. } if a == k)
            })
        };
        terms
            .iter()
            .filter_map(|t| match t.map {
                CocycleMap::Psi1(i, j) if !touches(i) && !touches(j) => Some((i, j)),
                _ => None,
            })
            .collect()
    }
}

/// Weights of `d(Y_i) = Y_i`, `d(Y_j) = -Y_j` on `X_1..X_6, Y_1..Y_{n-6}`.
pub fn yy_weights(n: usize, i: usize, j: usize) -> Vec<Rational> {
    let mut w = vec![q(0); n];
    w[y(i)] = q(1);
    w[y(j)] = q(-1);
    w
}

const fn one(map: CocycleMap) -> CocycleTerm {
    CocycleTerm {
        map,
        coeff: Coefficient::One,
    }
}

const fn alpha(map: CocycleMap) -> CocycleTerm {
    CocycleTerm {
        map,
        coeff: Coefficient::Alpha,
    }
}

const fn psi(s: usize, i: usize) -> CocycleMap {
    CocycleMap::Psi { s, i }
}

use CocycleMap::{Phi1, Phi1k, Phi2, Phi3, Phi3k, Psi1};
use PairPattern::{EvenOdd, OddEven, Shifted};
use Parity::{Even as E, Odd as O};

const fn sum(start: usize, guard: Option<usize>, offset: usize, pattern: PairPattern) -> GuardedSum {
    GuardedSum {
        start,
        guard,
        offset,
        pattern,
    }
}

const fn entry(
    id: usize,
    parity: Parity,
    min_m: usize,
    terms: &'static [CocycleTerm],
    guarded_sum: GuardedSum,
    claimed_cn_dims: &'static [usize],
) -> CatalogEntry {
    let expected_derived_dim = if id <= 5 {
        6
    } else if id <= 32 {
        5
    } else {
        4
    };
    CatalogEntry {
        id,
        parity,
        min_m,
        terms,
        guarded_sum,
        expected_derived_dim,
        claimed_cn_dims,
    }
}

#[rustfmt::skip]
static FAMILIES: [CatalogEntry; 45] = [
    entry(1, E, 4, &[one(Phi1k(1)), one(Phi3k(2)), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(2, E, 5, &[one(Phi1k(1)), one(Phi3k(2)), one(psi(3, 3))], sum(2, None, 3, OddEven), &[]),
    entry(3, O, 4, &[one(Phi1k(1)), one(Phi3k(2)), one(psi(3, 3))], sum(2, Some(4), 3, EvenOdd), &[]),
    entry(4, E, 4, &[one(Phi1k(1)), one(Phi3k(2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(5, E, 4, &[one(Phi1k(1)), one(Phi2), one(Phi3k(2)), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(6, O, 4, &[one(Phi1k(1)), one(psi(3, 2))], sum(2, None, 3, EvenOdd), &[]),
    entry(7, E, 4, &[one(Phi1k(1)), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(8, O, 3, &[one(Phi1k(1)), one(Phi2)], sum(2, Some(3), 3, EvenOdd), &[]),
    entry(9, O, 3, &[one(Phi1k(1)), one(Phi3)], sum(1, Some(3), 3, EvenOdd), &[]),
    entry(10, O, 3, &[one(Phi1k(1))], sum(1, Some(3), 3, EvenOdd), &[]),
    entry(11, O, 3, &[one(Phi3k(1)), one(psi(3, 1)), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(12, E, 4, &[one(Phi3k(1)), one(psi(3, 1)), one(psi(4, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[8]),
    entry(13, E, 4, &[one(Phi3k(1)), one(psi(3, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(14, O, 4, &[one(Phi3k(1)), one(psi(3, 1))], sum(1, None, 3, EvenOdd), &[]),
    entry(15, O, 4, &[one(Phi3k(1)), one(Phi1), one(psi(4, 1)), one(psi(3, 2))], sum(1, None, 3, EvenOdd), &[9]),
    entry(16, E, 4, &[one(Phi3k(1)), one(Phi1), one(psi(4, 1)), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[8]),
    entry(17, O, 3, &[one(Phi3k(1)), one(Phi1), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(18, O, 4, &[one(Phi3k(1)), one(Phi1), one(psi(4, 3)), one(psi(3, 2))], sum(2, Some(4), 3, EvenOdd), &[]),
    entry(19, E, 5, &[one(Phi3k(1)), one(Phi1), one(Psi1(2, 4)), one(psi(3, 2)), one(psi(4, 3))], sum(2, Some(5), 4, Shifted), &[]),
    entry(20, E, 4, &[one(Phi3k(1)), one(Phi1), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(21, O, 4, &[one(Phi3k(1)), one(Phi1), one(psi(3, 2))], sum(1, None, 3, EvenOdd), &[]),
    entry(22, E, 4, &[one(Phi3k(1)), one(Phi1), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(23, O, 3, &[one(Phi3k(1)), one(Phi1)], sum(1, None, 3, EvenOdd), &[]),
    entry(24, O, 3, &[one(Phi3k(1)), alpha(Phi2), one(psi(3, 1)), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(25, E, 4, &[one(Phi3k(1)), alpha(Phi2), one(psi(3, 1)), one(psi(4, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[8]),
    entry(26, E, 4, &[one(Phi3k(1)), one(Phi2), one(psi(3, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[8]),
    entry(27, O, 3, &[one(Phi3k(1)), one(Phi2), one(psi(3, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(28, O, 4, &[one(Phi3k(1)), one(Phi1), one(Phi2), one(psi(3, 2)), one(psi(4, 3))], sum(2, Some(4), 3, EvenOdd), &[]),
    entry(29, E, 5, &[one(Phi3k(1)), one(Phi1), one(Phi2), one(psi(3, 2)), one(psi(4, 3)), one(Psi1(2, 4))], sum(2, Some(5), 4, Shifted), &[]),
    entry(30, E, 4, &[one(Phi3k(1)), one(Phi1), one(Phi2), one(psi(3, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(31, O, 4, &[one(Phi3k(1)), one(Phi1), one(Phi2), one(psi(3, 2))], sum(1, None, 3, EvenOdd), &[]),
    entry(32, E, 4, &[one(Phi3k(1)), one(Phi1), one(Phi2), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(33, E, 4, &[one(Phi1), one(psi(3, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[]),
    entry(34, E, 4, &[one(Phi1), one(Phi2), one(psi(3, 1)), one(psi(4, 2))], sum(2, Some(4), 3, OddEven), &[8]),
    entry(35, O, 4, &[one(Phi1), one(psi(3, 1)), one(psi(4, 2)), one(Psi1(1, 3))], sum(2, Some(4), 3, EvenOdd), &[]),
    entry(36, O, 4, &[one(Phi1), one(Phi2), one(psi(3, 1)), one(psi(4, 2)), one(Psi1(1, 3))], sum(2, Some(4), 3, EvenOdd), &[9]),
    entry(37, O, 3, &[one(Phi1), one(psi(3, 1)), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(38, E, 4, &[one(Phi1), one(psi(3, 1))], sum(1, None, 3, OddEven), &[]),
    entry(39, E, 4, &[one(Phi1), one(Phi2), one(psi(3, 1))], sum(1, None, 3, OddEven), &[8]),
    entry(40, O, 3, &[one(Phi1), one(psi(3, 1))], sum(1, None, 3, EvenOdd), &[]),
    entry(41, O, 3, &[one(Phi1), one(Phi2), one(psi(3, 1))], sum(1, Some(3), 3, EvenOdd), &[7]),
    entry(42, O, 3, &[one(Phi1), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[]),
    entry(43, O, 3, &[one(Phi1), one(Phi2), one(psi(4, 1))], sum(1, Some(3), 3, EvenOdd), &[]),
    entry(44, E, 3, &[one(Phi1)], sum(1, Some(3), 3, OddEven), &[]),
    entry(45, E, 3, &[one(Phi1), one(Phi2)], sum(1, Some(3), 3, OddEven), &[]),
];

/// All 45 families in order of id.
pub fn list_families() -> &'static [CatalogEntry] {
    &FAMILIES
}

pub fn family(id: usize) -> Result<&'static CatalogEntry> {
    id.checked_sub(1)
        .and_then(|i| FAMILIES.get(i))
        .ok_or(Error::UnknownFamily(id))
}

/// `g₀ⁿ` plus the family's cocycle terms. `alpha` is required exactly for
/// the families that carry a parameter (24 and 25).
pub fn build_family(id: usize, n: usize, alpha: Option<&Rational>) -> Result<LieAlgebra> {
    let e = family(id)?;
    let alpha = match (e.takes_alpha(), alpha) {
        (true, None) => return Err(Error::MissingParameter(id)),
        (false, Some(_)) => return Err(Error::UnexpectedParameter(id)),
        (_, a) => a,
    };
    if !e.is_admissible(n) {
        return Err(Error::InadmissibleDimension { family: id, n });
    }
    let mut entries = build_g0_entries();
    for t in e.instance_terms(n) {
        let c = match t.coeff {
            Coefficient::One => q(1),
            Coefficient::Alpha => alpha.cloned().expect("checked above"),
        };
        entries.extend(t.map.entries(&c));
    }
    LieAlgebra::from_brackets(n, Some(g0_labels(n)), entries)
}

/// Index of `X_1`, the characteristic vector of every family.
pub const X1: usize = x(1);
