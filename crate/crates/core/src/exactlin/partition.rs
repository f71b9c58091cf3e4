use std::fmt;

use super::{Matrix, Rational, Subspace};
use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic, which is the order used to compare
/// characteristic sequences.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into weakly decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(head, 1, ..., 1)` with `ones` trailing ones.
    pub fn hook(head: usize, ones: usize) -> Self {
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(1, ones));
        Partition::new(parts)
    }

    /// Rebuilds the Jordan type from `r_k = rank(N^k)`, `k = 0, 1, ...,`
    /// ending in 0. The number of blocks of size at least `k` is
    /// `r_{k-1} - r_k`.
    pub fn from_rank_sequence(ranks: &[usize]) -> Self {
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for (k, &count) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k + 1, count - next));
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Ranks of `N^0, N^1, ...` up to and including the first zero.
///
/// The image of `N^k` is tracked directly as a subspace, so no matrix powers
/// are formed. Fails with [`Error::NotNilpotent`] if the image stops
/// shrinking before reaching zero.
pub fn rank_sequence(n: &Matrix) -> Result<Vec<usize>> {
    if !n.is_square() {
        return Err(Error::NotSquare {
            rows: n.rows(),
            cols: n.cols(),
        });
    }
    let dim = n.rows();
    let mut ranks = vec![dim];
    let mut image = Subspace::full(dim);
    while !image.is_zero() {
        let next: Vec<Vec<Rational>> = image.basis_vectors().map(|v| n.mul_vec(v)).collect::<Result<_>>()?;
        let next = Subspace::span(dim, next)?;
        if next.dim() == image.dim() {
            return Err(Error::NotNilpotent);
        }
        ranks.push(next.dim());
        image = next;
    }
    Ok(ranks)
}

/// Jordan block sizes of a nilpotent operator, largest first.
pub fn nilpotent_jordan_partition(n: &Matrix) -> Result<Partition> {
    Ok(Partition::from_rank_sequence(&rank_sequence(n)?))
}
