//! The `E6` root system and the central series of parabolic nilradicals.
//!
//! Simple roots are numbered as in Bourbaki: the Dynkin diagram is the chain
//! `1 - 3 - 4 - 5 - 6` with `2` attached to `4`, and the maximal root is
//! `(1,2,2,3,2,1)`.
//!
//! Nothing here instantiates structure constants. In a Chevalley basis
//! `[X_α, X_β]` is a nonzero multiple of `X_{α+β}` exactly when `α+β` is a
//! root, and that criterion is all the bracket analysis needs.

mod witness;

pub use witness::{
    reference_witnesses, two_abelian_witness, verify_witness, Abelianity, ReferenceWitness, WitnessCheck,
};

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};

pub const RANK: usize = 6;

/// Coordinates over the simple roots `α_1..α_6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub [i32; RANK]);

impl Root {
    pub fn simple(i: usize) -> Root {
        let mut c = [0; RANK];
        c[i - 1] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32; RANK] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Coefficient-wise `self ≥ other`.
    pub fn dominates(&self, other: &Root) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Add for Root {
    type Output = Root;

    fn add(self, rhs: Root) -> Root {
        Root(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl Sub for Root {
    type Output = Root;

    fn sub(self, rhs: Root) -> Root {
        Root(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive roots of `E6`, sorted by height and then coefficients.
#[derive(Clone, Debug)]
pub struct RootSystem {
    positive: Vec<Root>,
    lookup: HashSet<Root>,
    cartan: [[i32; RANK]; RANK],
}

/// Edges of the `E6` Dynkin diagram, 1-based.
const EDGES: [(usize, usize); 5] = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];

fn e6_cartan() -> [[i32; RANK]; RANK] {
    let mut a = [[0; RANK]; RANK];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in EDGES {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    a
}

/// Closes the simple roots under the simple reflections
/// `s_i(β) = β - ⟨β, α_i^∨⟩ α_i`, keeping positive roots.
pub fn build_e6() -> RootSystem {
    let cartan = e6_cartan();
    let mut seen: HashSet<Root> = (1..=RANK).map(Root::simple).collect();
    let mut frontier: Vec<Root> = seen.iter().copied().collect();
    while let Some(beta) = frontier.pop() {
        for i in 0..RANK {
            let pairing: i32 = (0..RANK).map(|j| beta.0[j] * cartan[j][i]).sum();
            let mut r = beta;
            r.0[i] -= pairing;
            if r.is_positive() && seen.insert(r) {
                frontier.push(r);
            }
        }
    }
    let mut positive: Vec<Root> = seen.iter().copied().collect();
    positive.sort_by_key(|r| (r.height(), r.0));
    RootSystem {
        positive,
        lookup: seen,
        cartan,
    }
}

impl RootSystem {
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn cartan_matrix(&self) -> &[[i32; RANK]; RANK] {
        &self.cartan
    }

    /// Membership in `Φ = Φ⁺ ∪ -Φ⁺`.
    pub fn is_root(&self, r: &Root) -> bool {
        self.lookup.contains(r) || self.lookup.contains(&Root(r.0.map(|c| -c)))
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.lookup.contains(r)
    }

    /// The positive root dominating every other one coefficient-wise.
    pub fn maximal_root(&self) -> Root {
        let top = *self.positive.last().expect("nonempty");
        debug_assert!(self.positive.iter().all(|r| top.dominates(r)));
        top
    }
}

/// A nonempty subset `Δ₁` of the simple roots, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSpec {
    delta1: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let delta1: BTreeSet<usize> = indices.into_iter().collect();
        if delta1.is_empty() {
            return Err(Error::InvalidSubset("empty".into()));
        }
        if let Some(bad) = delta1.iter().find(|&&i| !(1..=RANK).contains(&i)) {
            return Err(Error::InvalidSubset(format!("index {bad} outside 1..6")));
        }
        Ok(ParabolicSpec { delta1 })
    }

    /// Parses a comma-separated list such as `1,4`.
    pub fn parse(s: &str) -> Result<Self> {
        let idx = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(idx)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.delta1.iter().copied()
    }

    /// `h_{Δ₁}(α)`: sum of the coefficients of `α` over `Δ₁`.
    pub fn height(&self, r: &Root) -> i32 {
        self.delta1.iter().map(|&i| r.0[i - 1]).sum()
    }
}

impl fmt::Display for ParabolicSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.delta1.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// `Φ₂⁺` split by `Δ₁`-height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layers {
    pub phi2: Vec<Root>,
    pub by_height: BTreeMap<i32, Vec<Root>>,
}

impl Layers {
    pub fn max_height(&self) -> i32 {
        self.by_height.keys().next_back().copied().unwrap_or(0)
    }

    /// Roots of height at least `k`, which span `C^{k-1} n(Δ₁)`.
    pub fn at_least(&self, k: i32) -> impl Iterator<Item = &Root> + '_ {
        self.by_height.range(k..).flat_map(|(_, v)| v.iter())
    }
}

/// Positive roots with nonzero `Δ₁`-height, grouped by that height.
pub fn layers(rs: &RootSystem, spec: &ParabolicSpec) -> Layers {
    let phi2: Vec<Root> = rs
        .positive_roots()
        .iter()
        .copied()
        .filter(|r| spec.height(r) >= 1)
        .collect();
    let mut by_height: BTreeMap<i32, Vec<Root>> = BTreeMap::new();
    for r in &phi2 {
        by_height.entry(spec.height(r)).or_default().push(*r);
    }
    Layers { phi2, by_height }
}

/// `dim C^k n(Δ₁)` for `k = 0, 1, ...` up to and including the first zero.
/// `C^k n` is spanned by the root spaces of `Δ₁`-height at least `k+1`.
pub fn nilradical_lcs_dims(rs: &RootSystem, spec: &ParabolicSpec) -> Vec<usize> {
    let l = layers(rs, spec);
    let mut dims = Vec::new();
    for k in 0.. {
        let d = l.at_least(k + 1).count();
        dims.push(d);
        if d == 0 {
            break;
        }
    }
    dims
}

/// The sixteen subsets `Δ₁` whose nilradicals are 2-abelian.
pub fn family_l() -> Vec<ParabolicSpec> {
    const L: [&[usize]; 16] = [
        &[1, 4],
        &[4, 6],
        &[3, 5],
        &[3, 4],
        &[4, 5],
        &[2, 3],
        &[2, 5],
        &[2, 4],
        &[1, 2, 3],
        &[2, 5, 6],
        &[1, 2, 5],
        &[2, 3, 6],
        &[1, 4, 6],
        &[1, 2, 6],
        &[1, 3, 5],
        &[3, 5, 6],
    ];
    L.iter()
        .map(|s| ParabolicSpec::new(s.iter().copied()).expect("valid subset"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirty_six_positive_roots() {
        let rs = build_e6();
        assert_eq!(rs.positive_roots().len(), 36);
        for i in 1..=6 {
            assert!(rs.is_positive_root(&Root::simple(i)));
        }
        assert!(rs.is_root(&Root([1; 6])));
        assert!(rs.is_root(&Root([-1; 6])));
    }

    #[test]
    fn maximal_root() {
        let rs = build_e6();
        let d = rs.maximal_root();
        assert_eq!(d, Root([1, 2, 2, 3, 2, 1]));
        for i in 1..=6 {
            assert!(!rs.is_root(&(d + Root::simple(i))));
        }
        assert_eq!(ParabolicSpec::new([1, 4]).unwrap().height(&d), 4);
    }

    #[test]
    fn root_strings_oracle() {
        // Independent count: the number of roots of each height in E6 follows
        // the exponents 1,4,5,7,8,11, giving 6,5,5,5,4,3,3,2,1,1,1 roots of
        // heights 1..11.
        let rs = build_e6();
        let mut counts = [0usize; 12];
        for r in rs.positive_roots() {
            counts[r.height() as usize] += 1;
        }
        assert_eq!(&counts[1..], &[6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1]);
    }

    #[test]
    fn layer_examples() {
        let rs = build_e6();
        let l1 = layers(&rs, &ParabolicSpec::new([1]).unwrap());
        assert_eq!(l1.by_height.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(nilradical_lcs_dims(&rs, &ParabolicSpec::new([1]).unwrap())[1], 0);
        let all = ParabolicSpec::new(1..=6).unwrap();
        let la = layers(&rs, &all);
        assert_eq!(la.phi2.len(), 36);
        assert_eq!(la.max_height(), 11);
        let dims = nilradical_lcs_dims(&rs, &all);
        assert_eq!(dims.len(), 12);
        assert!(dims.windows(2).all(|w| w[0] > w[1]));
        let l14 = layers(&rs, &ParabolicSpec::new([1, 4]).unwrap());
        assert!(l14.by_height[&4].contains(&rs.maximal_root()));
    }

    #[test]
    fn spec_validation() {
        assert!(ParabolicSpec::new([]).is_err());
        assert!(ParabolicSpec::new([7]).is_err());
        assert!(ParabolicSpec::parse("1,x").is_err());
        assert_eq!(ParabolicSpec::parse("4, 1").unwrap().to_string(), "{1,4}");
        assert_eq!(family_l().len(), 16);
    }
}
