//! Lie algebras given by structure constants in a fixed basis.
//!
//! Indices are 0-based throughout the library API. Only brackets `[X_i, X_j]`
//! with `i < j` are stored; the rest follow from antisymmetry.
//!
//! The catalog reads a Maurer–Cartan equation `dω_k = ω_i ∧ ω_j` as
//! `[X_i, X_j] = +X_k`. Flipping that global sign gives an isomorphic algebra
//! with the same series, Jordan types and abelianity, so nothing checked here
//! depends on it.

mod charseq;
mod quotient;
mod series;

pub use charseq::CharSeqEstimate;
pub use quotient::Quotient;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, unit_vec, zero_vec, Matrix, Partition, Rational};

/// Sparse linear combination of basis vectors, sorted by index.
pub type Terms = Vec<(usize, Rational)>;

/// Finite-dimensional algebra with an alternating bracket.
///
/// Construction does not check the Jacobi identity; call
/// [`LieAlgebra::verify_jacobi`] for that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Terms>,
}

/// A basis triple where the Jacobi identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    /// `[[Xi,Xj],Xk] + [[Xk,Xi],Xj] + [[Xj,Xk],Xi]`.
    pub residual: Vec<Rational>,
}

/// Summary of the basic invariants of a nilpotent algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub dim: usize,
    pub jacobi_violations: usize,
    pub lcs_dims: Vec<usize>,
    pub nilindex: Option<usize>,
    pub commutativity_index: Option<usize>,
    /// Jordan type of `ad` at the first basis vector outside `C¹g`.
    pub char_seq_claimed_vector: Option<Partition>,
    pub char_seq_sampled: Option<Partition>,
    pub derived_dim: usize,
}

/// Default labels `X1, ..., Xn`.
pub fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("X{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from entries `(i, j, k, c)` meaning `[X_i, X_j] += c X_k`.
    ///
    /// Entries with `i > j` are folded in by antisymmetry, repeated keys are
    /// summed and zero coefficients dropped. `labels` defaults to
    /// [`default_labels`].
    pub fn from_brackets<I>(dim: usize, labels: Option<Vec<String>>, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let labels = match labels {
            Some(l) if l.len() != dim => {
                return Err(Error::LabelCount {
                    expected: dim,
                    found: l.len(),
                })
            }
            Some(l) => l,
            None => default_labels(dim),
        };
        let mut acc: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, k, c) in entries {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(Error::IndexOutOfRange { index, dim });
                }
            }
            if i == j {
                return Err(Error::DiagonalBracket(i));
            }
            let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
            *acc.entry(key).or_default().entry(k).or_insert_with(Rational::zero) += c;
        }
        let brackets = acc
            .into_iter()
            .filter_map(|(key, terms)| {
                let terms: Terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                (!terms.is_empty()).then_some((key, terms))
            })
            .collect();
        Ok(LieAlgebra { dim, labels, brackets })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            dim,
            labels: default_labels(dim),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Nonzero brackets `[X_i, X_j]`, `i < j`, in key order.
    pub fn brackets(&self) -> impl Iterator<Item = ((usize, usize), &Terms)> + '_ {
        self.brackets.iter().map(|(&k, v)| (k, v))
    }

    /// Number of nonzero brackets `[X_i, X_j]` with `i < j`.
    pub fn bracket_count(&self) -> usize {
        self.brackets.len()
    }

    /// `c_ij^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        let (key, sign) = if i <= j { ((i, j), 1) } else { ((j, i), -1) };
        self.brackets
            .get(&key)
            .and_then(|t| t.iter().find(|(idx, _)| *idx == k))
            .map(|(_, c)| if sign > 0 { c.clone() } else { -c })
            .unwrap_or_else(Rational::zero)
    }

    /// `[X_i, X_j]` as a dense vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        let (key, sign) = if i <= j { ((i, j), 1) } else { ((j, i), -1) };
        if let Some(terms) = self.brackets.get(&key) {
            for (k, c) in terms {
                out[*k] = if sign > 0 { c.clone() } else { -c };
            }
        }
        out
    }

    /// `[x, y]` for coordinate vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_vec(x)?;
        self.check_vec(y)?;
        let mut out = zero_vec(self.dim);
        for (&(i, j), terms) in &self.brackets {
            let coef = &x[i] * &y[j] - &x[j] * &y[i];
            if coef.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &coef * c;
            }
        }
        Ok(out)
    }

    /// Matrix of `Y ↦ [x, Y]`; column `b` holds `[x, X_b]`.
    pub fn ad_matrix(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_vec(x)?;
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (&(i, j), terms) in &self.brackets {
            // [x, X_j] picks up x_i [X_i, X_j]; [x, X_i] picks up -x_j [X_i, X_j].
            for (k, c) in terms {
                if !x[i].is_zero() {
                    let v = m.get(*k, j) + &x[i] * c;
                    m.set(*k, j, v);
                }
                if !x[j].is_zero() {
                    let v = m.get(*k, i) - &x[j] * c;
                    m.set(*k, i, v);
                }
            }
        }
        Ok(m)
    }

    /// Every basis triple `i < j < k` with nonzero Jacobi residual.
    pub fn verify_jacobi(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    let mut r = self.bracket_with_basis(&xij, k);
                    let xki = self.basis_bracket(k, i);
                    let xjk = self.basis_bracket(j, k);
                    for (acc, (a, b)) in r.iter_mut().zip(
                        self.bracket_with_basis(&xki, j)
                            .into_iter()
                            .zip(self.bracket_with_basis(&xjk, i)),
                    ) {
                        *acc += a + b;
                    }
                    if !is_zero_vec(&r) {
                        out.push(JacobiViolation {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_lie(&self) -> bool {
        self.verify_jacobi().is_empty()
    }

    /// `[v, X_b]`.
    fn bracket_with_basis(&self, v: &[Rational], b: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (a, va) in v.iter().enumerate() {
            if va.is_zero() || a == b {
                continue;
            }
            let (key, sign) = if a < b { ((a, b), true) } else { ((b, a), false) };
            if let Some(terms) = self.brackets.get(&key) {
                for (k, c) in terms {
                    let t = va * c;
                    if sign {
                        out[*k] += t;
                    } else {
                        out[*k] -= t;
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        unit_vec(self.dim, i)
    }

    /// Collects the standard invariants. Characteristic sequences are only
    /// reported for nilpotent algebras.
    pub fn analyze(&self, seed: u64, samples: usize) -> AnalysisReport {
        let lcs = self.lower_central_series();
        let nilpotent = lcs.last().is_some_and(|s| s.is_zero());
        let derived_dim = lcs.get(1).map_or(0, |s| s.dim());
        let (claimed, sampled) = if nilpotent {
            let first = (0..self.dim).find(|&i| !lcs[1].contains(&unit_vec(self.dim, i)).unwrap_or(true));
            let claimed = first.and_then(|i| self.char_seq_at(&unit_vec(self.dim, i)).ok());
            let sampled = self.char_seq_estimate(seed, samples).ok().map(|e| e.partition);
            (claimed, sampled)
        } else {
            (None, None)
        };
        AnalysisReport {
            dim: self.dim,
            jacobi_violations: self.verify_jacobi().len(),
            lcs_dims: lcs.iter().map(|s| s.dim()).collect(),
            nilindex: nilpotent.then(|| lcs.len() - 1),
            commutativity_index: self.commutativity_index().ok(),
            char_seq_claimed_vector: claimed,
            char_seq_sampled: sampled,
            derived_dim,
        }
    }

    fn check_vec(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::exactlin::q;

    pub fn heisenberg() -> LieAlgebra {
        LieAlgebra::from_brackets(3, None, [(0, 1, 2, q(1))]).unwrap()
    }

    /// Model filiform algebra: `[X1, X_i] = X_{i+1}`.
    pub fn model_filiform(n: usize) -> LieAlgebra {
        LieAlgebra::from_brackets(n, None, (1..n - 1).map(|i| (0, i, i + 1, q(1)))).unwrap()
    }

    /// `g₀⁷` written out by hand: `[X1, X_{j-1}] = X_j` for `j = 3..6`,
    /// with `Y1` central.
    pub fn g0_7() -> LieAlgebra {
        LieAlgebra::from_brackets(7, None, (2..6).map(|j| (0, j - 1, j, q(1)))).unwrap()
    }

    /// `Q_6`: model filiform plus `[X2, X5] = X6`, `[X3, X4] = -X6`.
    pub fn q6() -> LieAlgebra {
        let mut e: Vec<_> = (1..5).map(|i| (0, i, i + 1, q(1))).collect();
        e.push((1, 4, 5, q(1)));
        e.push((2, 3, 5, q(-1)));
        LieAlgebra::from_brackets(6, None, e).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exactlin::q;
    use proptest::prelude::*;

    #[test]
    fn antisymmetric_input_normalizes() {
        let a = LieAlgebra::from_brackets(3, None, [(1, 0, 2, q(-1))]).unwrap();
        assert_eq!(a, heisenberg());
        assert_eq!(a.structure_constant(1, 0, 2), q(-1));
    }

    #[test]
    fn cancelling_duplicates_are_dropped() {
        let a = LieAlgebra::from_brackets(3, None, [(0, 1, 2, q(2)), (1, 0, 2, q(2))]).unwrap();
        assert_eq!(a.bracket_count(), 0);
    }

    #[test]
    fn bad_input_is_rejected() {
        assert_eq!(
            LieAlgebra::from_brackets(3, None, [(0, 3, 2, q(1))]),
            Err(Error::IndexOutOfRange { index: 3, dim: 3 })
        );
        assert_eq!(
            LieAlgebra::from_brackets(3, None, [(1, 1, 2, q(1))]),
            Err(Error::DiagonalBracket(1))
        );
        assert!(matches!(
            LieAlgebra::from_brackets(3, Some(vec!["A".into()]), []),
            Err(Error::LabelCount { expected: 3, found: 1 })
        ));
    }

    #[test]
    fn jacobi_holds_on_fixtures() {
        for g in [heisenberg(), model_filiform(6), g0_7(), q6()] {
            assert!(g.is_lie());
        }
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // [X1,X2]=X3, [X1,X3]=X2, [X2,X3]=X2: the residual on (1,2,3) is -X3.
        let g = LieAlgebra::from_brackets(3, None, [(0, 1, 2, q(1)), (0, 2, 1, q(1)), (1, 2, 1, q(1))]).unwrap();
        let v = g.verify_jacobi();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (0, 1, 2));
        assert_eq!(v[0].residual, vec![q(0), q(0), q(-1)]);
    }

    #[test]
    fn heisenberg_ad_has_rank_one() {
        let g = heisenberg();
        assert_eq!(g.ad_matrix(&g.basis_vector(0)).unwrap().rank(), 1);
    }

    fn vec_in(n: usize) -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec(-3i64..=3, n).prop_map(|v| v.into_iter().map(q).collect())
    }

    proptest! {
        #[test]
        fn ad_is_a_representation(x in vec_in(6), y in vec_in(6)) {
            let g = q6();
            let xy = g.bracket(&x, &y).unwrap();
            let lhs = g.ad_matrix(&xy).unwrap();
            let rhs = g.ad_matrix(&x).unwrap().commutator(&g.ad_matrix(&y).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(is_zero_vec(&g.ad_matrix(&x).unwrap().mul_vec(&x).unwrap()));
            prop_assert_eq!(g.ad_matrix(&x).unwrap().mul_vec(&y).unwrap(), xy);
        }
    }
}
