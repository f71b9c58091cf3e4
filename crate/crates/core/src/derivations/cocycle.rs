use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{is_zero_vec, zero_vec, Rational};
use crate::liealg::LieAlgebra;

/// Alternating bilinear map `g × g → g`, stored on basis pairs `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCochain {
    dim: usize,
    values: BTreeMap<(usize, usize), Vec<Rational>>,
}

/// A basis triple where `δc` does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

impl TwoCochain {
    pub fn zero(dim: usize) -> Self {
        TwoCochain {
            dim,
            values: BTreeMap::new(),
        }
    }

    /// Entries `(i, j, k, c)` mean `c(X_i, X_j) += c X_k`, with the same
    /// normalization as [`LieAlgebra::from_brackets`].
    pub fn from_entries<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Rational)>,
    {
        let mut values: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
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
            values.entry(key).or_insert_with(|| zero_vec(dim))[k] += c;
        }
        values.retain(|_, v| !is_zero_vec(v));
        Ok(TwoCochain { dim, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Nonzero values on basis pairs `i < j`.
    pub fn values(&self) -> impl Iterator<Item = ((usize, usize), &[Rational])> + '_ {
        self.values.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    /// `c(X_i, X_j)`.
    pub fn eval_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let (key, neg) = if i <= j { ((i, j), false) } else { ((j, i), true) };
        match self.values.get(&key) {
            Some(v) if neg => v.iter().map(|x| -x).collect(),
            Some(v) => v.clone(),
            None => zero_vec(self.dim),
        }
    }

    /// `c(v, X_b)`.
    fn eval_left(&self, v: &[Rational], b: usize) -> Vec<Rational> {
        let mut out = zero_vec(self.dim);
        for (a, va) in v.iter().enumerate() {
            if va.is_zero() || a == b {
                continue;
            }
            for (o, x) in out.iter_mut().zip(self.eval_basis(a, b)) {
                if !x.is_zero() {
                    *o += va * x;
                }
            }
        }
        out
    }
}

/// Basis triples `i < j < k` where
/// `δc(x,y,z) = [x,c(y,z)] - [y,c(x,z)] + [z,c(x,y)] - c([x,y],z) + c([x,z],y) - c([y,z],x)`
/// is nonzero. Empty iff `c` is a 2-cocycle with adjoint coefficients.
pub fn cocycle2_check(g: &LieAlgebra, c: &TwoCochain) -> Result<Vec<CocycleViolation>> {
    let n = g.dim();
    if c.dim != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: c.dim,
        });
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (x, y, z) = (g.basis_vector(i), g.basis_vector(j), g.basis_vector(k));
                let parts = [
                    (1, g.bracket(&x, &c.eval_basis(j, k))?),
                    (-1, g.bracket(&y, &c.eval_basis(i, k))?),
                    (1, g.bracket(&z, &c.eval_basis(i, j))?),
                    (-1, c.eval_left(&g.basis_bracket(i, j), k)),
                    (1, c.eval_left(&g.basis_bracket(i, k), j)),
                    (-1, c.eval_left(&g.basis_bracket(j, k), i)),
                ];
                let mut r = zero_vec(n);
                for (sign, v) in parts {
                    for (acc, x) in r.iter_mut().zip(v) {
                        if sign > 0 {
                            *acc += x;
                        } else {
                            *acc -= x;
                        }
                    }
                }
                if !is_zero_vec(&r) {
                    out.push(CocycleViolation {
                        triple: (i, j, k),
                        residual: r,
                    });
                }
            }
        }
    }
    Ok(out)
}
