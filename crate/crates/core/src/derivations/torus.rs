use num_traits::Zero;

use super::diagonal;
use crate::exactlin::{kernel_basis, q, Matrix, Rational, Subspace};
use crate::liealg::LieAlgebra;

/// One weight per basis vector, describing a diagonal endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn to_matrix(&self) -> Matrix {
        diagonal(&self.0)
    }

    /// Whether `λ_i + λ_j = λ_k` whenever `c_ij^k ≠ 0`.
    pub fn is_compatible(&self, g: &LieAlgebra) -> bool {
        g.brackets()
            .all(|((i, j), terms)| terms.iter().all(|(k, _)| &self.0[i] + &self.0[j] == self.0[*k]))
    }
}

/// Solutions of `λ_i + λ_j = λ_k` over the nonzero structure constants.
///
/// These are exactly the diagonal derivations in the given basis, so a
/// nonzero solution certifies rank at least one. A zero result says nothing
/// about other bases.
pub fn diagonal_torus(g: &LieAlgebra) -> Subspace {
    let n = g.dim();
    let mut rows = Vec::new();
    for ((i, j), terms) in g.brackets() {
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            let mut r = vec![Rational::zero(); n];
            r[i] += q(1);
            r[j] += q(1);
            r[*k] -= q(1);
            rows.push(r);
        }
    }
    if rows.is_empty() {
        return Subspace::full(n);
    }
    kernel_basis(&Matrix::from_rows(rows).expect("uniform rows"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::is_derivation;

    #[test]
    fn g0_7_has_three_free_weights() {
        let g = LieAlgebra::from_brackets(7, None, (2..6).map(|j| (0, j - 1, j, q(1)))).unwrap();
        let t = diagonal_torus(&g);
        // Oracle: λ1, λ2 and λ_{Y1} are free and λ_j = λ1 + λ_{j-1} fixes the rest.
        assert_eq!(t.dim(), 3);
        for v in t.basis_vectors() {
            let w = WeightVector(v.to_vec());
            assert!(w.is_compatible(&g));
            assert!(is_derivation(&g, &w.to_matrix()).unwrap().is_empty());
            for j in 2..6 {
                assert_eq!(&v[0] + &v[j - 1], v[j]);
            }
        }
    }

    #[test]
    fn abelian_torus_is_everything() {
        assert_eq!(diagonal_torus(&LieAlgebra::abelian(3)).dim(), 3);
    }
}
