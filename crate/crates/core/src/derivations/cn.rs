use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{derivation_space, diagonal_torus, flatten, unflatten, DerivationSpace};
use crate::exactlin::{nilpotent_jordan_partition, q, Matrix, Rational, Subspace};
use crate::liealg::LieAlgebra;

/// Outcome of the characteristic-nilpotence test, with its certificate.
#[derive(Clone, Debug)]
pub struct CnReport {
    pub characteristically_nilpotent: bool,
    pub der_dim: usize,
    /// `dim D_t` for `D_0 = Der(g)`, `D_{t+1} = [Der(g), D_t]`, ending at 0
    /// or at the first repeated value.
    pub chain_dims: Vec<usize>,
    /// The nonzero term where the chain stalls, when there is one.
    pub stable: Option<Subspace>,
    /// Dimension of the weight system solution space in the given basis.
    pub torus_dim: usize,
    /// A derivation that is not a nilpotent matrix, if one turned up among
    /// the basis and a few random combinations.
    pub non_nilpotent_derivation: Option<Matrix>,
}

/// `Der(g)` is nilpotent iff its lower central series, computed on matrix
/// subspaces with the commutator bracket, reaches zero.
pub fn is_characteristically_nilpotent(g: &LieAlgebra) -> CnReport {
    let der = derivation_space(g);
    let n = g.dim();
    let basis = der.matrices();
    let mut chain_dims = vec![der.dim()];
    let mut current = der.space().clone();
    let mut stable = None;
    while !current.is_zero() {
        let mut vs = Vec::new();
        for a in &basis {
            for b in current.basis_vectors() {
                let c = a.commutator(&unflatten(n, b)).expect("square matrices");
                if !c.is_zero() {
                    vs.push(flatten(n, &c).expect("n x n"));
                }
            }
        }
        let next = Subspace::span(n * n, vs).expect("n² entries");
        if next.dim() == current.dim() {
            stable = Some(current);
            break;
        }
        chain_dims.push(next.dim());
        current = next;
    }
    let cn = stable.is_none();
    CnReport {
        characteristically_nilpotent: cn,
        der_dim: der.dim(),
        chain_dims,
        stable,
        torus_dim: diagonal_torus(g).dim(),
        non_nilpotent_derivation: if cn { None } else { non_nilpotent_derivation(&der, 0, 8) },
    }
}

/// Looks for a derivation with a nonzero eigenvalue among the basis and
/// `samples` random integer combinations of it.
pub fn non_nilpotent_derivation(der: &DerivationSpace, seed: u64, samples: usize) -> Option<Matrix> {
    let basis = der.matrices();
    let n = der.algebra_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random = (0..samples).map(|_| {
        basis.iter().fold(Matrix::zeros(n, n), |acc, b| {
            let c: Rational = q(rng.random_range(-3..=3));
            &acc + &b.scale(&c)
        })
    });
    basis
        .iter()
        .cloned()
        .chain(random)
        .find(|m| nilpotent_jordan_partition(m).is_err())
}
