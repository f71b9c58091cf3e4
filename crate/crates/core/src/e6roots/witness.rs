use super::{layers, ParabolicSpec, Root, RootSystem};

/// Commutativity index of `n(Δ₁)` read off from root addition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Abelianity {
    /// `[C¹n, C¹n] = 0`. This includes an abelian `n`.
    OneAbelian,
    /// `[X_α, X_β] ≠ 0` with `α, β ∈ C¹n`, and `[C²n, C²n] = 0`.
    TwoAbelian { alpha: Root, beta: Root },
    /// Two roots of height at least 3 that add up to a root.
    DeeperAbelian { gamma: Root, epsilon: Root },
}

/// Brute force over pairs in `C¹n` and `C²n`.
///
/// The witness prefers a pair of height-2 roots, taking the one with the
/// highest sum and then the lexicographically smallest pair. Only if no
/// height-2 pair works does it fall back to any pair of height at least 2.
pub fn two_abelian_witness(rs: &RootSystem, spec: &ParabolicSpec) -> Abelianity {
    let l = layers(rs, spec);
    let pairs = |min: i32| {
        let roots: Vec<Root> = l.at_least(min).copied().collect();
        let mut out = Vec::new();
        for (i, a) in roots.iter().enumerate() {
            for b in &roots[i + 1..] {
                if rs.is_positive_root(&(*a + *b)) {
                    out.push(if a <= b { (*a, *b) } else { (*b, *a) });
                }
            }
        }
        out
    };
    if let Some(&(gamma, epsilon)) = pairs(3).iter().min() {
        return Abelianity::DeeperAbelian { gamma, epsilon };
    }
    let c1 = pairs(2);
    if c1.is_empty() {
        return Abelianity::OneAbelian;
    }
    let best = |cands: Vec<(Root, Root)>| {
        cands.into_iter().max_by(|x, y| {
            let (sx, sy) = (x.0 + x.1, y.0 + y.1);
            (sx.height(), sx.0).cmp(&(sy.height(), sy.0)).then_with(|| y.cmp(x))
        })
    };
    let h2: Vec<_> = c1
        .iter()
        .copied()
        .filter(|(a, b)| spec.height(a) == 2 && spec.height(b) == 2)
        .collect();
    let (alpha, beta) = best(h2).or_else(|| best(c1)).expect("nonempty");
    Abelianity::TwoAbelian { alpha, beta }
}

/// Every property a witness pair is asked to have, checked separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub heights: (i32, i32),
    pub alpha_in_phi2: bool,
    pub beta_in_phi2: bool,
    pub sum: Root,
    pub sum_in_phi2: bool,
}

impl WitnessCheck {
    /// Both roots in `C¹n` with a nonzero bracket.
    pub fn is_valid(&self) -> bool {
        self.heights.0 >= 2 && self.heights.1 >= 2 && self.alpha_in_phi2 && self.beta_in_phi2 && self.sum_in_phi2
    }

    /// As [`is_valid`](Self::is_valid), with both roots in the height-2 layer.
    pub fn is_height_two(&self) -> bool {
        self.is_valid() && self.heights == (2, 2)
    }
}

pub fn verify_witness(rs: &RootSystem, spec: &ParabolicSpec, alpha: &Root, beta: &Root) -> WitnessCheck {
    let in_phi2 = |r: &Root| rs.is_positive_root(r) && spec.height(r) >= 1;
    let sum = *alpha + *beta;
    WitnessCheck {
        heights: (spec.height(alpha), spec.height(beta)),
        alpha_in_phi2: in_phi2(alpha),
        beta_in_phi2: in_phi2(beta),
        sum,
        sum_in_phi2: in_phi2(&sum),
    }
}

/// A recorded witness pair with its claimed sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceWitness {
    pub spec: ParabolicSpec,
    pub alpha: Root,
    pub beta: Root,
    pub claimed_sum: Root,
}

/// The eleven recorded witness pairs, written as given in terms of
/// `δ₁ = α_1 + ... + α_6` and the maximal root `δ`.
pub fn reference_witnesses() -> Vec<ReferenceWitness> {
    let a = Root::simple;
    let d1 = Root([1; 6]);
    let d = Root([1, 2, 2, 3, 2, 1]);
    let rows: [(&[usize], Root, Root, Root); 11] = [
        (&[1, 4], d1 - a(5) - a(6), d - a(1) - a(2) - a(4), d),
        (&[3, 5], d1, d1 - a(1) - a(6) + a(4), d),
        (&[4, 5], d1 - a(1) - a(2) - a(6), d1, d - a(2) - a(4)),
        (&[2, 3], d1, d1 - a(1) - a(2) - a(6), d - a(2) - a(4)),
        (&[2, 4], d1, d1 - a(1) - a(6) + a(4), d),
        (&[1, 2, 3], d - d1, d1 - a(2), d - a(2)),
        (&[1, 2, 5], d - d1, d1 - a(2), d - a(2)),
        (&[1, 3, 6], d1 - a(6), d1 - a(1) - a(2), d - a(2) - a(4)),
        (&[1, 4, 6], d1 - a(6), d1 - a(1) - a(2), d - a(2) - a(4)),
        (&[1, 2, 6], d1 - a(1), d1 + a(4), d),
        (&[1, 3, 5], d1 - a(2) - a(6), d1 + a(4), d - a(2)),
    ];
    rows.into_iter()
        .map(|(s, alpha, beta, claimed_sum)| ReferenceWitness {
            spec: ParabolicSpec::new(s.iter().copied()).expect("valid subset"),
            alpha,
            beta,
            claimed_sum,
        })
        .collect()
}
