use crate::error::{Error, Result};
use crate::exactlin::{q, unit_vec, Rational, Subspace};
use crate::liealg::LieAlgebra;

/// `g_m`, dimension `2m+2`, in the basis `X_1..X_{2m+2}`.
pub fn build_gm(m: usize) -> Result<LieAlgebra> {
    if m < 4 {
        return Err(Error::DimensionTooSmall { n: 2 * m + 2, min: 10 });
    }
    let x = |i: usize| i - 1;
    let mut e = Vec::new();
    for j in 3..=2 * m {
        e.push((x(1), x(j - 1), x(j), q(1)));
    }
    for j in 2..=m {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        e.push((x(j), x(2 * m + 1 - j), x(2 * m), q(sign)));
    }
    e.push((x(2), x(3), x(2 * m + 1), q(1)));
    e.push((x(1), x(2 * m + 1), x(2 * m + 2), q(1)));
    e.push((x(2), x(4), x(2 * m + 2), q(1)));
    LieAlgebra::from_brackets(2 * m + 2, None, e)
}

fn check_bounds(m: usize, k: usize) -> Result<()> {
    if 4 <= m && m <= k && k + 2 <= 2 * m {
        Ok(())
    } else {
        Err(Error::BoundsViolation { m, k })
    }
}

fn factor_labels(m: usize, k: usize) -> Vec<String> {
    let mut l: Vec<String> = (1..=k + 1).map(|i| format!("X{i}")).collect();
    l.push(format!("X{}", 2 * m + 1));
    l.push(format!("X{}", 2 * m + 2));
    l
}

/// `g_m / C^k g_m` written directly from its equations, in the basis
/// `X_1..X_{k+1}, X_{2m+1}, X_{2m+2}`.
pub fn build_gm_factor(m: usize, k: usize) -> Result<LieAlgebra> {
    check_bounds(m, k)?;
    let (a, b) = (k + 1, k + 2);
    let x = |i: usize| i - 1;
    let mut e: Vec<_> = (3..=k + 1).map(|j| (x(1), x(j - 1), x(j), q(1))).collect();
    e.push((x(2), x(3), a, q(1)));
    e.push((x(1), a, b, q(1)));
    e.push((x(2), x(4), b, q(1)));
    LieAlgebra::from_brackets(k + 3, Some(factor_labels(m, k)), e)
}

/// Weights of `V_1` and `V_2` on `X_1..X_{k+1}, X_{2m+1}, X_{2m+2}`.
pub fn rmk_weights(m: usize, k: usize) -> Result<[Vec<Rational>; 2]> {
    check_bounds(m, k)?;
    let k = k as i64;
    let mut v1 = vec![q(1), q(k - 1)];
    v1.extend((3..=k + 1).map(|j| q(k - 3 + j)));
    v1.extend([q(2 * k - 1), q(2 * k)]);
    let mut v2 = vec![q(0)];
    v2.extend((2..=k + 1).map(|_| q(1)));
    v2.extend([q(2), q(2)]);
    Ok([v1, v2])
}

/// `r_{m,k}`: the factor `g_m / C^k g_m` extended by the torus `V_1, V_2`,
/// with `[X̄_2, X̄_3] = a X̄_{2m+1}` and `[X̄_2, X̄_4] = b X̄_{2m+2}`.
///
/// Basis order is `V_1, V_2, X̄_1..X̄_{k+1}, X̄_{2m+1}, X̄_{2m+2}`. The bracket
/// satisfies Jacobi exactly when `a = b`.
pub fn build_rmk(m: usize, k: usize, a: &Rational, b: &Rational) -> Result<LieAlgebra> {
    let [w1, w2] = rmk_weights(m, k)?;
    let xb = |i: usize| i + 1;
    let (p, r) = (xb(k + 2), xb(k + 3));
    let mut e = Vec::new();
    for (v, w) in [(0, &w1), (1, &w2)] {
        for (i, wi) in w.iter().enumerate() {
            e.push((v, 2 + i, 2 + i, wi.clone()));
        }
    }
    for j in 2..=k {
        e.push((xb(1), xb(j), xb(j + 1), q(1)));
    }
    e.push((xb(2), xb(3), p, a.clone()));
    e.push((xb(2), xb(4), r, b.clone()));
    e.push((xb(1), p, r, q(1)));
    let mut labels = vec!["V1".to_string(), "V2".to_string()];
    labels.extend(factor_labels(m, k));
    LieAlgebra::from_brackets(k + 5, Some(labels), e)
}

/// `s_{m,k} = r_{m,k} / ⟨X̄_{2m+2}⟩` with `a = b = 1`.
pub fn build_smk(m: usize, k: usize) -> Result<LieAlgebra> {
    let r = build_rmk(m, k, &q(1), &q(1))?;
    let top = Subspace::span(r.dim(), [unit_vec(r.dim(), r.dim() - 1)])?;
    Ok(r.quotient(&top)?.algebra)
}
