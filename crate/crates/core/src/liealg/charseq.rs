use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{nilpotent_jordan_partition, q, unit_vec, Partition, Rational, Subspace};

/// Best characteristic vector found by [`LieAlgebra::char_seq_estimate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharSeqEstimate {
    pub partition: Partition,
    pub witness: Vec<Rational>,
    /// Candidates that were evaluated (those outside `C¹g`).
    pub candidates: usize,
}

impl LieAlgebra {
    /// Jordan type of `ad(x)` for `x` outside `C¹g`.
    pub fn char_seq_at(&self, x: &[Rational]) -> Result<Partition> {
        self.char_seq_at_with(&self.derived_algebra(), x)
    }

    fn char_seq_at_with(&self, derived: &Subspace, x: &[Rational]) -> Result<Partition> {
        if derived.contains(x)? {
            return Err(Error::VectorInDerivedAlgebra);
        }
        nilpotent_jordan_partition(&self.ad_matrix(x)?)
    }

    /// Lexicographic maximum of [`char_seq_at`](Self::char_seq_at) over the
    /// basis vectors outside `C¹g` and `samples` random vectors with
    /// coefficients in `-3..=3` drawn from a ChaCha8 stream seeded by `seed`.
    ///
    /// The true characteristic sequence is a maximum over infinitely many
    /// vectors. It is attained on a Zariski-open set, so random sampling finds
    /// it generically, but the result is formally only a lower bound.
    pub fn char_seq_estimate(&self, seed: u64, samples: usize) -> Result<CharSeqEstimate> {
        let derived = self.derived_algebra();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let basis = (0..self.dim).map(|i| unit_vec(self.dim, i));
        let random = (0..samples).map(|_| (0..self.dim).map(|_| q(rng.random_range(-3..=3))).collect::<Vec<_>>());
        let mut best: Option<(Partition, Vec<Rational>)> = None;
        let mut candidates = 0;
        for x in basis.chain(random) {
            if derived.contains(&x)? {
                continue;
            }
            candidates += 1;
            let p = self.char_seq_at_with(&derived, &x)?;
            if best.as_ref().is_none_or(|(b, _)| p > *b) {
                best = Some((p, x));
            }
        }
        let (partition, witness) = best.ok_or(Error::VectorInDerivedAlgebra)?;
        Ok(CharSeqEstimate {
            partition,
            witness,
            candidates,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn g0_7_at_x1() {
        let g = g0_7();
        assert_eq!(g.char_seq_at(&unit_vec(7, 0)).unwrap(), Partition::hook(5, 2));
        assert_eq!(g.char_seq_estimate(0, 16).unwrap().partition, Partition::hook(5, 2));
        assert_eq!(g.char_seq_estimate(99, 3).unwrap().partition, Partition::hook(5, 2));
    }

    #[test]
    fn derived_vectors_are_rejected() {
        let g = g0_7();
        assert_eq!(g.char_seq_at(&unit_vec(7, 3)), Err(Error::VectorInDerivedAlgebra));
    }

    #[test]
    fn abelian_is_all_ones() {
        let g = LieAlgebra::abelian(4);
        assert_eq!(g.char_seq_estimate(5, 8).unwrap().partition, Partition::new(vec![1; 4]));
    }

    #[test]
    fn estimate_is_deterministic() {
        let g = q6();
        assert_eq!(g.char_seq_estimate(7, 10).unwrap(), g.char_seq_estimate(7, 10).unwrap());
    }

    proptest! {
        #[test]
        fn invariant_under_scaling(
            x in proptest::collection::vec(-3i64..=3, 6),
            num in 1i64..5, den in 1i64..5, neg in any::<bool>(),
        ) {
            let g = q6();
            let x: Vec<Rational> = x.into_iter().map(q).collect();
            prop_assume!(!g.derived_algebra().contains(&x).unwrap());
            let lambda = crate::exactlin::frac(if neg { -num } else { num }, den);
            let y: Vec<Rational> = x.iter().map(|c| c * &lambda).collect();
            let p = g.char_seq_at(&x).unwrap();
            prop_assert_eq!(p.sum(), 6);
            prop_assert_eq!(g.char_seq_at(&y).unwrap(), p);
        }
    }
}
