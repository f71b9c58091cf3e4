use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::subspace::EchelonBasis;
use super::{Rational, Subspace};
use crate::error::{Error, Result};

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from a flat row-major entry list.
    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix from explicit rows. An empty row list gives a `0 x cols`
    /// matrix with `cols = 0`.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(Matrix { rows: n, cols, entries })
    }

    /// Convenience constructor for small integer matrices.
    ///
    /// # Panics
    ///
    /// Panics on ragged input.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| super::q(x)).collect())
            .collect();
        Self::from_rows(v).expect("ragged integer matrix")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(n_rows: usize, cols: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n_rows {
                return Err(Error::DimensionMismatch {
                    expected: n_rows,
                    found: c.len(),
                });
            }
            for (i, x) in c.iter().enumerate() {
                m.entries[i * cols.len() + j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.entries[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.entries[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                super::axpy(orow, a, other.row(k));
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Matrix commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        let ab = self.try_mul(other)?;
        let ba = other.try_mul(self)?;
        Ok(&ab - &ba)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_echelon(echelon_of(self))
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("shape mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form (same shape as `m`, zero rows last) and rank.
///
/// The result depends only on the row space of `m`, so it doubles as a
/// canonical form for subspaces.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let eb = echelon_of(m);
    let rank = eb.dim();
    let mut entries = eb.into_matrix().into_entries();
    entries.resize(m.rows * m.cols, Rational::zero());
    (Matrix::from_flat(m.rows, m.cols, entries).expect("shape"), rank)
}

pub(crate) fn echelon_of(m: &Matrix) -> EchelonBasis {
    let mut eb = EchelonBasis::new(m.cols);
    for row in m.row_iter() {
        eb.insert(row.to_vec());
    }
    eb
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
///
/// Each row is first scaled by the lcm of its denominators. Every division in
/// the elimination is exact, and intermediate entries are bounded by minors of
/// the input.
pub fn rank(m: &Matrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.row_iter().map(integer_row).collect();
    let (nr, nc) = (m.rows, m.cols);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..nc {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Canonical basis of the null space `{v : M v = 0}`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let eb = echelon_of(m);
    let rank = eb.dim();
    let r = eb.into_matrix();
    let n = m.cols;
    let pivots: Vec<usize> = (0..rank)
        .map(|i| r.row(i).iter().position(|x| !x.is_zero()).expect("rref row is nonzero"))
        .collect();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut eb = EchelonBasis::new(n);
    for f in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = super::unit_vec(n, f);
        for (i, &p) in pivots.iter().enumerate() {
            let x = r.get(i, f);
            if !x.is_zero() {
                v[p] = -x;
            }
        }
        eb.insert(v);
    }
    Subspace::from_echelon(eb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{q, Rational};
    use proptest::prelude::*;

    #[test]
    fn rref_identity() {
        let (r, k) = rref(&Matrix::identity(2));
        assert_eq!(r, Matrix::identity(2));
        assert_eq!(k, 2);
    }

    #[test]
    fn rref_duplicate_rows() {
        let (r, k) = rref(&Matrix::from_ints(&[[1, 1], [1, 1]]));
        assert_eq!(k, 1);
        assert_eq!(r, Matrix::from_ints(&[[1, 1], [0, 0]]));
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel_basis(&Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn kernel_of_shift() {
        let k = kernel_basis(&Matrix::from_ints(&[[0, 1, 0], [0, 0, 1], [0, 0, 0]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis().row(0), &[q(1), q(0), q(0)]);
    }

    #[test]
    fn bareiss_handles_skipped_columns() {
        let m = Matrix::from_ints(&[[0, 2, 4, 1], [0, 1, 2, 0], [0, 3, 6, 1]]);
        assert_eq!(rank(&m), 2);
        assert_eq!(rref(&m).1, 2);
    }

    /// Rank as the size of the largest nonvanishing minor, by cofactor expansion.
    fn minor_rank(m: &Matrix) -> usize {
        fn det(rows: &[Vec<Rational>]) -> Rational {
            if rows.is_empty() {
                return Rational::one();
            }
            let n = rows.len();
            let mut acc = Rational::zero();
            for j in 0..n {
                if rows[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Rational>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &rows[0][j] * det(&sub);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        for k in (1..=m.rows().min(m.cols())).rev() {
            for rs in subsets(m.rows(), k) {
                for cs in subsets(m.cols(), k) {
                    let sub: Vec<Vec<Rational>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| m.get(r, c).clone()).collect())
                        .collect();
                    if !det(&sub).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-2i64..=2, rows * cols)
            .prop_map(move |v| Matrix::from_flat(rows, cols, v.into_iter().map(q).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn rref_rank_matches_minor_oracle(m in small_matrix(4, 6)) {
            let (r, k) = rref(&m);
            prop_assert_eq!(k, minor_rank(&m));
            prop_assert_eq!(rank(&m), k);
            // Same row space: stacking the rref onto m adds no rank.
            let mut stacked: Vec<Vec<Rational>> = m.row_iter().map(<[_]>::to_vec).collect();
            stacked.extend(r.row_iter().map(<[_]>::to_vec));
            prop_assert_eq!(rank(&Matrix::from_rows(stacked).unwrap()), k);
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix(5, 4)) {
            let (r, _) = rref(&m);
            prop_assert_eq!(rref(&r).0, r);
        }

        #[test]
        fn kernel_vectors_are_annihilated(m in small_matrix(3, 6)) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.dim(), m.cols() - rank(&m));
            for v in k.basis().row_iter() {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
        }
    }
}
