use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, Matrix, Rational, Subspace};

impl LieAlgebra {
    /// `[A, B]`, spanned by brackets of basis vectors.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        let mut vs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vs.push(self.bracket(x, y)?);
            }
        }
        Subspace::span(self.dim, vs)
    }

    /// `C⁰g = g`, `C^{k+1}g = [g, C^k g]`, up to the first term that repeats
    /// (which is not included). For a nilpotent algebra the last term is zero.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim)];
        loop {
            let last = series.last().expect("series is nonempty");
            if last.is_zero() {
                break;
            }
            let mut vs = Vec::new();
            for i in 0..self.dim {
                for v in last.basis_vectors() {
                    vs.push(self.bracket_with_basis(v, i));
                }
            }
            let next = Subspace::span(self.dim, vs).expect("lengths match");
            if next.dim() == last.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    /// Dimensions of the lower central series.
    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lower_central_series().iter().map(Subspace::dim).collect()
    }

    /// `C¹g = [g, g]`.
    pub fn derived_algebra(&self) -> Subspace {
        let vs = self.brackets().map(|((i, j), _)| self.basis_bracket(i, j));
        Subspace::span(self.dim, vs).expect("lengths match")
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// First `k` with `C^k g = 0`, if any.
    pub fn nilindex(&self) -> Option<usize> {
        let s = self.lower_central_series();
        s.last().is_some_and(Subspace::is_zero).then(|| s.len() - 1)
    }

    /// Smallest `k` with `[C^k g, C^k g] = 0`. An algebra is `k`-abelian
    /// exactly when this index is `k`.
    pub fn commutativity_index(&self) -> Result<usize> {
        let series = self.lower_central_series();
        if !series.last().is_some_and(Subspace::is_zero) {
            return Err(Error::NotNilpotent);
        }
        for (k, c) in series.iter().enumerate() {
            if self.bracket_subspaces(c, c)?.is_zero() {
                return Ok(k);
            }
        }
        unreachable!("the last term of a nilpotent series is zero")
    }

    /// `{x : [x, v] = 0 for all v in s}`.
    pub fn centralizer(&self, s: &Subspace) -> Result<Subspace> {
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        if s.is_zero() {
            return Ok(Subspace::full(self.dim));
        }
        // [x, v] = -ad(v) x, so stack the ad(v) for v in a basis of s.
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(s.dim() * self.dim);
        for v in s.basis_vectors() {
            let ad = self.ad_matrix(v)?;
            rows.extend(ad.row_iter().map(<[_]>::to_vec));
        }
        Ok(kernel_basis(&Matrix::from_rows(rows)?))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(self.dim))
            .expect("ambient dimension matches")
    }

    /// Whether `[g, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        for v in s.basis_vectors() {
            for i in 0..self.dim {
                if !s.contains(&self.bracket_with_basis(v, i))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
