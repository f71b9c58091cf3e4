use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{EchelonBasis, Rational, Subspace};

/// Sparse row: column index to nonzero coefficient.
pub type SparseRow = BTreeMap<usize, Rational>;

/// Reduced row-echelon form over sparse rows.
///
/// Suited to the homogeneous systems met here, where each equation touches a
/// handful of unknowns out of `n²`. Pivot rows are kept fully reduced, so a
/// new row needs a single pass over its pivot columns.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    cols: usize,
    /// Pivot column to its normalized row.
    rows: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new(cols: usize) -> Self {
        SparseEchelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds an equation. Returns false if it was dependent on earlier ones.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row.keys().copied().filter(|c| self.rows.contains_key(c)).collect();
        for p in hits {
            let Some(f) = row.get(&p).cloned() else { continue };
            for (c, v) in &self.rows[&p] {
                let e = row.entry(*c).or_insert_with(Rational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
        let Some((&p, lead)) = row.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        for v in row.values_mut() {
            *v *= &inv;
        }
        for other in self.rows.values_mut() {
            let Some(f) = other.get(&p).cloned() else { continue };
            for (c, v) in &row {
                let e = other.entry(*c).or_insert_with(Rational::zero);
                *e -= &f * v;
                if e.is_zero() {
                    other.remove(c);
                }
            }
        }
        self.rows.insert(p, row);
        true
    }

    /// Solution space of the homogeneous system, one basis vector per free
    /// column.
    pub fn kernel(&self) -> Subspace {
        let mut eb = EchelonBasis::new(self.cols);
        for free in (0..self.cols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (&p, row) in &self.rows {
                if let Some(x) = row.get(&free) {
                    v[p] = -x;
                }
            }
            eb.insert(v);
        }
        Subspace::from_echelon(eb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{kernel_basis, q, Matrix};
    use proptest::prelude::*;

    fn sparse(row: &[i64]) -> SparseRow {
        row.iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, &v)| (i, q(v)))
            .collect()
    }

    #[test]
    fn dependent_rows_are_reported() {
        let mut s = SparseEchelon::new(3);
        assert!(s.insert(sparse(&[1, 2, 0])));
        assert!(!s.insert(sparse(&[2, 4, 0])));
        assert!(!s.insert(SparseRow::new()));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.kernel().dim(), 2);
    }

    proptest! {
        #[test]
        fn kernel_matches_dense(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 1..7)) {
            let mut s = SparseEchelon::new(6);
            for r in &rows {
                s.insert(sparse(r));
            }
            let dense = kernel_basis(&Matrix::from_ints(&rows));
            prop_assert_eq!(s.kernel(), dense);
        }
    }
}
