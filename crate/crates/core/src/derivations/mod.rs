//! Derivations, characteristic nilpotence, weight systems and 2-cocycles.
//!
//! A linear map `D` is stored as an `n × n` matrix acting on column vectors,
//! so column `b` holds `D X_b`. Derivation spaces live in `Q^{n²}` with the
//! matrix flattened row-major: entry `D[a][b]` sits at index `a·n + b`.

mod cn;
mod cocycle;
mod torus;

pub use cn::{is_characteristically_nilpotent, non_nilpotent_derivation, CnReport};
pub use cocycle::{cocycle2_check, CocycleViolation, TwoCochain};
pub use torus::{diagonal_torus, WeightVector};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, Matrix, Rational, SparseEchelon, SparseRow, Subspace};
use crate::liealg::LieAlgebra;

/// `Der(g)` as a subspace of flattened `n × n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    algebra_dim: usize,
    space: Subspace,
}

/// A basis pair where `D[X_i,X_j] - [DX_i,X_j] - [X_i,DX_j]` is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationResidual {
    pub pair: (usize, usize),
    pub residual: Vec<Rational>,
}

impl DerivationSpace {
    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Echelon basis as matrices.
    pub fn matrices(&self) -> Vec<Matrix> {
        self.space
            .basis_vectors()
            .map(|v| unflatten(self.algebra_dim, v))
            .collect()
    }

    pub fn contains(&self, d: &Matrix) -> Result<bool> {
        self.space.contains(&flatten(self.algebra_dim, d)?)
    }
}

pub(crate) fn flatten(n: usize, d: &Matrix) -> Result<Vec<Rational>> {
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if d.rows() != n { d.rows() } else { d.cols() },
        });
    }
    Ok(d.entries().to_vec())
}

pub(crate) fn unflatten(n: usize, v: &[Rational]) -> Matrix {
    Matrix::from_flat(n, n, v.to_vec()).expect("n² entries")
}

/// Solves `D[X_i,X_j] = [DX_i,X_j] + [X_i,DX_j]` for all `i < j`.
pub fn derivation_space(g: &LieAlgebra) -> DerivationSpace {
    let n = g.dim();
    let table = bracket_table(g);
    let mut system = SparseEchelon::new(n * n);
    for i in 0..n {
        for j in i + 1..n {
            let mut rows: Vec<SparseRow> = vec![SparseRow::new(); n];
            // D[X_i,X_j]_t = sum_k c_ij^k D[t][k]
            for (k, c) in &table[i][j] {
                for (t, row) in rows.iter_mut().enumerate() {
                    add(row, t * n + k, c.clone());
                }
            }
            // [D X_i, X_j]_t = sum_a D[a][i] c_aj^t, and likewise for X_j.
            for a in 0..n {
                for (t, c) in &table[a][j] {
                    add(&mut rows[*t], a * n + i, -c);
                }
                for (t, c) in &table[i][a] {
                    add(&mut rows[*t], a * n + j, -c);
                }
            }
            for row in rows {
                if !row.is_empty() {
                    system.insert(row);
                }
            }
        }
    }
    DerivationSpace {
        algebra_dim: n,
        space: system.kernel(),
    }
}

fn add(row: &mut SparseRow, col: usize, c: Rational) {
    let e = row.entry(col).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        row.remove(&col);
    }
}

/// Dense table of `[X_a, X_b]` as sparse terms, both orders filled in.
fn bracket_table(g: &LieAlgebra) -> Vec<Vec<Vec<(usize, Rational)>>> {
    let n = g.dim();
    let mut t = vec![vec![Vec::new(); n]; n];
    for ((i, j), terms) in g.brackets() {
        t[i][j] = terms.clone();
        t[j][i] = terms.iter().map(|(k, c)| (*k, -c)).collect();
    }
    t
}

/// Basis pairs on which `d` fails the Leibniz rule. Empty iff `d` is a
/// derivation.
pub fn is_derivation(g: &LieAlgebra, d: &Matrix) -> Result<Vec<DerivationResidual>> {
    let n = g.dim();
    flatten(n, d)?;
    let images: Vec<Vec<Rational>> = (0..n).map(|b| d.column(b)).collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut r = d.mul_vec(&g.basis_bracket(i, j))?;
            let a = g.bracket(&images[i], &g.basis_vector(j))?;
            let b = g.bracket(&g.basis_vector(i), &images[j])?;
            for ((x, y), z) in r.iter_mut().zip(a).zip(b) {
                *x -= y + z;
            }
            if !is_zero_vec(&r) {
                out.push(DerivationResidual {
                    pair: (i, j),
                    residual: r,
                });
            }
        }
    }
    Ok(out)
}

/// Diagonal matrix with the given entries.
pub fn diagonal(weights: &[Rational]) -> Matrix {
    let n = weights.len();
    let mut m = Matrix::zeros(n, n);
    for (i, w) in weights.iter().enumerate() {
        m.set(i, i, w.clone());
    }
    m
}
