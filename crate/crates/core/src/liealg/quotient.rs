use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Rational, Subspace};

/// `g / I` on the complement spanned by the basis vectors at the non-pivot
/// columns of `I`'s echelon basis.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// Original basis index of each quotient basis vector.
    pub kept: Vec<usize>,
    pub ideal: Subspace,
}

impl Quotient {
    /// Image of `v` in the quotient basis.
    pub fn project(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        let r = self.ideal.reduce(v)?;
        Ok(self.kept.iter().map(|&i| r[i].clone()).collect())
    }

    pub fn project_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let vs = s.basis_vectors().map(|v| self.project(v)).collect::<Result<Vec<_>>>()?;
        Subspace::span(self.kept.len(), vs)
    }
}

impl LieAlgebra {
    /// Quotient by an ideal. Labels are inherited from the kept basis vectors.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: ideal.ambient_dim(),
            });
        }
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let kept: Vec<usize> = (0..self.dim).filter(|i| !ideal.pivots().contains(i)).collect();
        let labels = kept.iter().map(|&i| self.labels[i].clone()).collect();
        let mut entries = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate().skip(a + 1) {
                let r = ideal.reduce(&self.basis_bracket(i, j))?;
                for (c, &k) in kept.iter().enumerate() {
                    if !num_traits::Zero::is_zero(&r[k]) {
                        entries.push((a, b, c, r[k].clone()));
                    }
                }
            }
        }
        let algebra = LieAlgebra::from_brackets(kept.len(), Some(labels), entries)?;
        Ok(Quotient {
            algebra,
            kept,
            ideal: ideal.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exactlin::unit_vec;

    #[test]
    fn zero_ideal_gives_identical_constants() {
        let g = q6();
        let quo = g.quotient(&Subspace::zero(6)).unwrap();
        assert_eq!(quo.algebra, g);
        assert_eq!(quo.kept, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn non_ideal_is_rejected() {
        let g = heisenberg();
        let s = Subspace::span(3, [unit_vec(3, 0)]).unwrap();
        assert!(matches!(g.quotient(&s), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn quotient_preserves_series() {
        for g in [q6(), model_filiform(7), g0_7()] {
            for ideal in g.lower_central_series() {
                let quo = g.quotient(&ideal).unwrap();
                assert!(quo.algebra.is_lie());
                let lhs: Vec<_> = g
                    .lower_central_series()
                    .iter()
                    .map(|c| quo.project_subspace(c).unwrap())
                    .take_while(|s| !s.is_zero())
                    .collect();
                let rhs: Vec<_> = quo
                    .algebra
                    .lower_central_series()
                    .into_iter()
                    .take_while(|s| !s.is_zero())
                    .collect();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn model_filiform_mod_center() {
        let g = model_filiform(5);
        let quo = g.quotient(&g.center()).unwrap();
        assert_eq!(quo.algebra, model_filiform(4));
    }
}
