use num_traits::{One, Zero};

use super::{kernel_basis, Matrix, Rational};
use crate::error::{Error, Result};

/// Reduced row-echelon basis that accepts rows one at a time.
///
/// Rows are kept sorted by pivot column and fully reduced against each other,
/// so any two bases of the same space end up identical.
#[derive(Clone, Debug)]
pub(crate) struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub(crate) fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the span in place. Afterwards `v` is zero in every
    /// pivot column.
    pub(crate) fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in p..self.cols {
                if !row[c].is_zero() {
                    v[c] -= &f * &row[c];
                }
            }
        }
    }

    /// Adds `v` to the span. Returns false if it was already contained.
    pub(crate) fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Rational::one() / &v[p];
        for x in v[p..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for c in p..self.cols {
                if !v[c].is_zero() {
                    row[c] -= &f * &v[c];
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub(crate) fn into_matrix(self) -> Matrix {
        let cols = self.cols;
        let n = self.rows.len();
        Matrix::from_flat(n, cols, self.rows.into_iter().flatten().collect()).expect("echelon rows have uniform length")
    }
}

/// A linear subspace of `Q^n`, stored as its reduced row-echelon basis.
///
/// Two subspaces compare equal exactly when they are the same subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors. Every vector must have length `ambient`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut eb = EchelonBasis::new(ambient);
        for v in vectors {
            check_len(ambient, &v)?;
            eb.insert(v);
        }
        Ok(Self::from_echelon(eb))
    }

    pub(crate) fn from_echelon(eb: EchelonBasis) -> Self {
        let ambient = eb.cols;
        let pivots = eb.pivots.clone();
        Subspace {
            ambient,
            basis: eb.into_matrix(),
            pivots,
        }
    }

    pub(crate) fn to_echelon(&self) -> EchelonBasis {
        EchelonBasis {
            cols: self.ambient,
            rows: self.basis.row_iter().map(<[_]>::to_vec).collect(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Echelon basis, one basis vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_iter()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace: zero in every
    /// pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_len(self.ambient, v)?;
        let mut w = v.to_vec();
        for (row, &p) in self.basis.row_iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            super::axpy(&mut w, &-f, row);
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(super::is_zero_vec(&self.reduce(v)?))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_ambient(self.ambient, other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient, other.ambient)?;
        let mut eb = self.to_echelon();
        for v in other.basis_vectors() {
            eb.insert(v.to_vec());
        }
        Ok(Self::from_echelon(eb))
    }

    /// Annihilator under the standard dot product.
    pub fn orthogonal_complement(&self) -> Subspace {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        kernel_basis(&self.basis)
    }

    /// `A ∩ B = (A⊥ + B⊥)⊥`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        check_ambient(self.ambient, other.ambient)?;
        let perp = self.orthogonal_complement().sum(&other.orthogonal_complement())?;
        Ok(perp.orthogonal_complement())
    }
}

fn check_len(ambient: usize, v: &[Rational]) -> Result<()> {
    if v.len() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            found: v.len(),
        });
    }
    Ok(())
}

fn check_ambient(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, zero_vec};
    use proptest::prelude::*;

    #[test]
    fn full_plane_contains_anything() {
        let s = Subspace::span(2, vec![vec![q(1), q(0)], vec![q(0), q(1)]]).unwrap();
        assert!(s.contains(&[q(3), q(-7)]).unwrap());
        assert_eq!(s, Subspace::full(2));
    }

    #[test]
    fn empty_span_is_zero() {
        let s = Subspace::span(3, Vec::<Vec<Rational>>::new()).unwrap();
        assert!(s.is_zero());
        assert!(s.contains(&zero_vec(3)).unwrap());
        assert!(!s.contains(&[q(0), q(1), q(0)]).unwrap());
    }

    #[test]
    fn mismatched_lengths_are_rejected() {
        let err = Subspace::span(2, vec![vec![q(1), q(0), q(0)]]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
        let s = Subspace::full(2);
        assert!(s.contains(&[q(1)]).is_err());
        assert!(s.sum(&Subspace::zero(3)).is_err());
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let a = Subspace::span(3, vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(1)]]).unwrap();
        let b = Subspace::span(3, vec![vec![q(1), q(3), q(1)], vec![q(2), q(5), q(1)]]).unwrap();
        assert_eq!(a, b);
    }

    fn span_strategy() -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 0..4)
            .prop_map(|vs| Subspace::span(5, vs.into_iter().map(|v| v.into_iter().map(q).collect())).unwrap())
    }

    /// Independent route to `dim(A ∩ B)`: pairs `(x, y)` with `xA = yB` form the
    /// kernel of the stacked matrix `[A; -B]` acting on row vectors, and since
    /// both bases are independent that kernel is isomorphic to `A ∩ B`.
    fn intersection_dim_oracle(a: &Subspace, b: &Subspace) -> usize {
        let mut rows: Vec<Vec<Rational>> = a.basis_vectors().map(<[_]>::to_vec).collect();
        rows.extend(b.basis_vectors().map(|v| v.iter().map(|x| -x).collect()));
        if rows.is_empty() {
            return 0;
        }
        let stacked = Matrix::from_rows(rows).unwrap();
        kernel_basis(&stacked.transpose()).dim()
    }

    proptest! {
        #[test]
        fn modular_dimension_law(a in span_strategy(), b in span_strategy()) {
            let s = a.sum(&b).unwrap();
            let i = a.intersection(&b).unwrap();
            prop_assert_eq!(a.dim() + b.dim(), s.dim() + i.dim());
            prop_assert_eq!(i.dim(), intersection_dim_oracle(&a, &b));
            for v in i.basis_vectors() {
                prop_assert!(a.contains(v).unwrap() && b.contains(v).unwrap());
            }
            prop_assert!(a.is_subspace_of(&s).unwrap());
            prop_assert!(i.is_subspace_of(&a).unwrap());
        }

        #[test]
        fn reduce_is_idempotent_and_preserves_class(a in span_strategy(), v in proptest::collection::vec(-3i64..=3, 5)) {
            let v: Vec<Rational> = v.into_iter().map(q).collect();
            let r = a.reduce(&v).unwrap();
            prop_assert_eq!(a.reduce(&r).unwrap(), r.clone());
            let diff: Vec<Rational> = v.iter().zip(&r).map(|(x, y)| x - y).collect();
            prop_assert!(a.contains(&diff).unwrap());
        }
    }
}
