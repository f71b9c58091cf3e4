//! Batch verification suites.
//!
//! Every check carries the number of the acceptance criterion it feeds:
//!
//! | criterion | content                                         | suite     |
//! |-----------|-------------------------------------------------|-----------|
//! | 1         | Jacobi identity                                 | catalog, rigid |
//! | 2         | `C¹` dimension, commutativity index, char. seq. | catalog   |
//! | 3         | commutativity index is 1 or 2                   | catalog   |
//! | 4         | the listed maps are 2-cocycles of `g₀ⁿ`         | cocycles  |
//! | 5         | characteristic nilpotence matches the list      | cn        |
//! | 6         | rank bounds                                     | catalog   |
//! | 7         | `g_m`, its factors and `r_{m,k}`                | rigid     |
//! | 8         | `E6` parabolic nilradicals                      | e6        |
//!
//! Checks within a suite run on the rayon pool; the report is sorted by id.

use pfiliform::catalog::{
    build_family, build_g0, build_gm, build_gm_factor, build_rmk, family, list_families, rmk_weights, yy_weights,
    CocycleMap, X1,
};
use pfiliform::derivations::{
    cocycle2_check, diagonal, diagonal_torus, is_characteristically_nilpotent, is_derivation,
};
use pfiliform::e6roots::{
    build_e6, family_l, reference_witnesses, two_abelian_witness, verify_witness, Abelianity, ParabolicSpec, Root,
};
use pfiliform::exactlin::{frac, q, unit_vec, Partition, Rational, Subspace};
use pfiliform::LieAlgebra;
use rayon::prelude::*;

use crate::report::{Check, SuiteReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Catalog,
    Cocycles,
    Cn,
    Rigid,
    E6,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Catalog => "catalog",
            Suite::Cocycles => "cocycles",
            Suite::Cn => "cn",
            Suite::Rigid => "rigid",
            Suite::E6 => "e6",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_dim: usize,
    pub seed: u64,
    /// Random vectors tried by the characteristic-sequence sampler.
    pub samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_dim: 16,
            seed: 0,
            samples: 64,
        }
    }
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let checks = match suite {
        Suite::Catalog => catalog_checks(cfg),
        Suite::Cocycles => cocycle_checks(cfg),
        Suite::Cn => cn_checks(cfg),
        Suite::Rigid => rigid_checks(cfg),
        Suite::E6 => e6_checks(),
        Suite::All => {
            let mut all = catalog_checks(cfg);
            all.extend(cocycle_checks(cfg));
            all.extend(cn_checks(cfg));
            all.extend(rigid_checks(cfg));
            all.extend(e6_checks());
            all
        }
    };
    SuiteReport::new(suite.name(), cfg.seed, cfg.max_dim, checks)
}

fn par<T: Sync>(items: &[T], f: impl Fn(&T) -> Vec<Check> + Sync + Send) -> Vec<Check> {
    items.par_iter().flat_map_iter(f).collect()
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn first_jacobi_failure(g: &LieAlgebra) -> String {
    let v = g.verify_jacobi();
    match v.first() {
        None => String::new(),
        Some(f) => {
            let (i, j, k) = f.triple;
            format!(
                "{} violations, first at ({},{},{})",
                v.len(),
                g.label(i),
                g.label(j),
                g.label(k)
            )
        }
    }
}

/// A catalog member at one dimension; `family == 0` stands for `g₀ⁿ`.
#[derive(Clone, Debug)]
struct Instance {
    family: usize,
    n: usize,
    alpha: Option<Rational>,
}

impl Instance {
    fn tag(&self) -> String {
        let mut s = format!("g{:02}.n{:02}", self.family, self.n);
        if let Some(a) = &self.alpha {
            s.push_str(&format!(".a={a}"));
        }
        s
    }

    fn build(&self) -> LieAlgebra {
        if self.family == 0 {
            build_g0(self.n)
        } else {
            build_family(self.family, self.n, self.alpha.as_ref())
        }
        .expect("instances are enumerated from admissible data")
    }
}

fn instances(lo: usize, hi: usize, alphas: &[Rational]) -> Vec<Instance> {
    let mut out = Vec::new();
    for e in list_families() {
        for n in e.dims(lo, hi) {
            if e.takes_alpha() {
                out.extend(alphas.iter().map(|a| Instance {
                    family: e.id,
                    n,
                    alpha: Some(a.clone()),
                }));
            } else {
                out.push(Instance {
                    family: e.id,
                    n,
                    alpha: None,
                });
            }
        }
    }
    out
}

fn catalog_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let alphas = [q(0), q(1), q(-1), frac(3, 2)];
    let mut all = instances(7, cfg.max_dim, &alphas);
    all.extend((7..=cfg.max_dim).map(|n| Instance {
        family: 0,
        n,
        alpha: None,
    }));
    par(&all, |inst| catalog_instance(inst, cfg))
}

fn catalog_instance(inst: &Instance, cfg: &SuiteConfig) -> Vec<Check> {
    let g = inst.build();
    let tag = inst.tag();
    let n = inst.n;
    let jac = first_jacobi_failure(&g);
    let ci = g.commutativity_index();
    let mut out = vec![
        Check::new(format!("c1.jacobi.{tag}"), 1, "Jacobi identity", jac.is_empty(), jac),
        Check::new(
            format!("c3.abelianity.{tag}"),
            3,
            "commutativity index is 1 or 2",
            matches!(ci, Ok(1 | 2)),
            format!("{ci:?}"),
        ),
    ];
    if inst.family == 0 {
        return out;
    }
    let e = family(inst.family).expect("known family");

    let hook = Partition::hook(5, n - 5);
    let mut problems = Vec::new();
    if ci != Ok(2) {
        problems.push(format!("commutativity index {ci:?}"));
    }
    let derived = g.derived_algebra().dim();
    if derived != e.expected_derived_dim {
        problems.push(format!("dim C1 = {derived}, expected {}", e.expected_derived_dim));
    }
    let at_x1 = g.char_seq_at(&unit_vec(n, X1)).expect("nilpotent");
    if at_x1 != hook {
        problems.push(format!("c(X1) = {at_x1}"));
    }
    let est = g.char_seq_estimate(cfg.seed, cfg.samples).expect("nilpotent");
    if est.partition != hook {
        problems.push(format!("c(X) = {} at X = {}", est.partition, fmt_vec(&est.witness)));
    }
    out.push(Check::new(
        format!("c2.invariants.{tag}"),
        2,
        format!(
            "2-abelian, dim C1 = {}, characteristic sequence {hook}",
            e.expected_derived_dim
        ),
        problems.is_empty(),
        problems.join("; "),
    ));

    if inst.family <= 5 {
        let t = diagonal_torus(&g).dim();
        out.push(Check::new(
            format!("c6.rank.{tag}"),
            6,
            "diagonal torus of dimension at least 1",
            t >= 1,
            format!("torus dim {t}"),
        ));
    }
    let pairs = e.semisimple_pairs(n);
    if !pairs.is_empty() {
        let bad: Vec<String> = pairs
            .iter()
            .filter(|&&(i, j)| {
                !is_derivation(&g, &diagonal(&yy_weights(n, i, j)))
                    .expect("square")
                    .is_empty()
            })
            .map(|(i, j)| format!("(Y{i},Y{j})"))
            .collect();
        out.push(Check::new(
            format!("c6.semisimple.{tag}"),
            6,
            format!("d(Yi) = Yi, d(Yj) = -Yj is a derivation for {} pair(s)", pairs.len()),
            bad.is_empty(),
            bad.join(" "),
        ));
    }
    out
}

fn cocycle_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let dims: Vec<usize> = (7..=cfg.max_dim.min(12)).collect();
    par(&dims, |&n| {
        let g = build_g0(n).expect("n >= 7");
        CocycleMap::all_for(n)
            .into_iter()
            .map(|map| {
                let c = map.to_cochain(n).expect("map fits");
                let v = cocycle2_check(&g, &c).expect("matching dims");
                let details = v
                    .first()
                    .map(|f| format!("{} violations, first at {:?}", v.len(), f.triple))
                    .unwrap_or_default();
                Check::new(format!("c4.n{n:02}.{map}"), 4, "2-cocycle of g0", v.is_empty(), details)
            })
            .collect()
    })
}

fn cn_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let alphas = [q(1), q(-1), q(2)];
    let all = instances(7, cfg.max_dim.min(9), &alphas);
    par(&all, |inst| {
        let g = inst.build();
        let r = is_characteristically_nilpotent(&g);
        let claimed = family(inst.family).expect("known").claimed_cn(inst.n);
        let cn = r.characteristically_nilpotent;
        let certified = cn || r.torus_dim > 0 || r.stable.is_some();
        let mut details = format!(
            "computed {cn}, listed {claimed}; dim Der {}, chain {:?}, torus {}",
            r.der_dim, r.chain_dims, r.torus_dim
        );
        if r.non_nilpotent_derivation.is_some() {
            details.push_str(", non-nilpotent derivation found");
        }
        vec![Check::new(
            format!("c5.cn.{}", inst.tag()),
            5,
            if claimed {
                "characteristically nilpotent"
            } else {
                "not characteristically nilpotent, with certificate"
            },
            cn == claimed && certified,
            details,
        )]
    })
}

/// Structure constants of two algebras on the same index set agree.
fn same_brackets(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && a.brackets().eq(b.brackets())
}

fn rigid_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let ms: Vec<usize> = (4..=7).filter(|m| 2 * m + 2 <= cfg.max_dim).collect();
    let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
    for &m in &ms {
        tasks.push((m, None));
        tasks.extend((m..=2 * m - 2).map(|k| (m, Some(k))));
    }
    par(&tasks, |&(m, k)| match k {
        None => gm_checks(m, cfg),
        Some(k) => factor_checks(m, k, cfg),
    })
}

fn gm_checks(m: usize, cfg: &SuiteConfig) -> Vec<Check> {
    let g = build_gm(m).expect("m >= 4");
    let jac = first_jacobi_failure(&g);
    let target = Partition::new(vec![2 * m - 1, 2, 1]);
    let at_x1 = g.char_seq_at(&unit_vec(g.dim(), 0)).expect("nilpotent");
    let est = g.char_seq_estimate(cfg.seed, cfg.samples).expect("nilpotent");
    let ci = g.commutativity_index();
    let mut out = vec![
        Check::new(
            format!("c1.jacobi.gm.m{m}"),
            1,
            "Jacobi identity for g_m",
            jac.is_empty(),
            jac,
        ),
        Check::new(
            format!("c7.gm.m{m}"),
            7,
            format!(
                "g_m has characteristic sequence {target} and commutativity index {}",
                m - 1
            ),
            at_x1 == target && est.partition == target && ci == Ok(m - 1),
            format!("c(X1) = {at_x1}, sampled {}, index {ci:?}", est.partition),
        ),
    ];
    if m == 4 {
        let bad = build_rmk(4, 4, &q(1), &q(2)).expect("in bounds");
        let v = bad.verify_jacobi().len();
        out.push(Check::new(
            "c1.jacobi.rmk.m4.k4.a1.b2".into(),
            1,
            "r_{4,4} with a = 1, b = 2 violates Jacobi",
            v > 0,
            format!("{v} violations"),
        ));
    }
    out
}

fn factor_checks(m: usize, k: usize, cfg: &SuiteConfig) -> Vec<Check> {
    let tag = format!("m{m}.k{k:02}");
    let g = build_gm(m).expect("m >= 4");
    let ck = g.lower_central_series()[k].clone();
    let quot = g.quotient(&ck).expect("C^k is an ideal");
    let direct = build_gm_factor(m, k).expect("in bounds");
    let expected_kept: Vec<usize> = (0..=k).chain([2 * m, 2 * m + 1]).collect();
    let f = &quot.algebra;
    let target = Partition::new(vec![k, 2, 1]);
    let at_x1 = f.char_seq_at(&unit_vec(f.dim(), 0)).expect("nilpotent");
    let est = f.char_seq_estimate(cfg.seed, cfg.samples).expect("nilpotent");
    let ci = f.commutativity_index();
    let matches = quot.kept == expected_kept && same_brackets(f, &direct);

    let top = Subspace::span(direct.dim(), [unit_vec(direct.dim(), direct.dim() - 1)]).expect("in range");
    let reduced = direct.quotient(&top).expect("central").algebra;
    let small = Partition::new(vec![k, 1, 1]);
    let red_x1 = reduced.char_seq_at(&unit_vec(reduced.dim(), 0)).expect("nilpotent");
    let red_est = reduced.char_seq_estimate(cfg.seed, cfg.samples).expect("nilpotent");
    let red_ci = reduced.commutativity_index();

    let mut out = vec![
        Check::new(
            format!("c7.factor.{tag}"),
            7,
            format!("g_m / C^k g_m matches its equations, is 1-abelian, sequence {target}"),
            matches && ci == Ok(1) && at_x1 == target && est.partition == target,
            format!(
                "equations {}, index {ci:?}, c(X1) = {at_x1}, sampled {}",
                if matches { "match" } else { "differ" },
                est.partition
            ),
        ),
        Check::new(
            format!("c7.factor-mod-top.{tag}"),
            7,
            format!("quotient by X(2m+2) is 1-abelian with sequence {small}"),
            red_ci == Ok(1) && red_x1 == small && red_est.partition == small,
            format!("index {red_ci:?}, c(X1) = {red_x1}, sampled {}", red_est.partition),
        ),
        torus_check(m, k, &direct, &tag),
    ];
    if m <= 6 {
        let r = build_rmk(m, k, &q(1), &q(1)).expect("in bounds");
        let jac = first_jacobi_failure(&r);
        out.push(Check::new(
            format!("c1.jacobi.rmk.{tag}"),
            1,
            "Jacobi identity for r_{m,k} with a = b = 1",
            jac.is_empty(),
            jac,
        ));
    }
    out
}

/// `V_1`, `V_2` act on the factor diagonally with the listed weights and
/// commute with each other.
fn torus_check(m: usize, k: usize, factor: &LieAlgebra, tag: &str) -> Check {
    let weights = rmk_weights(m, k).expect("in bounds");
    let r = build_rmk(m, k, &q(1), &q(1)).expect("in bounds");
    let mut problems = Vec::new();
    if !r.basis_bracket(0, 1).iter().all(|c| *c == q(0)) {
        problems.push("[V1,V2] != 0".to_string());
    }
    for (v, w) in weights.iter().enumerate() {
        for (i, wi) in w.iter().enumerate() {
            let mut expected = vec![q(0); r.dim()];
            expected[2 + i] = wi.clone();
            if r.basis_bracket(v, 2 + i) != expected {
                problems.push(format!("[V{},{}]", v + 1, r.label(2 + i)));
            }
        }
        if !is_derivation(factor, &diagonal(w)).expect("square").is_empty() {
            problems.push(format!("V{} weights are not a derivation", v + 1));
        }
    }
    Check::new(
        format!("c7.torus.{tag}"),
        7,
        "V1, V2 act as commuting diagonal derivations with the listed weights",
        problems.is_empty(),
        problems.join("; "),
    )
}

fn e6_checks() -> Vec<Check> {
    let rs = build_e6();
    let mut out = vec![
        Check::new(
            "c8.roots".into(),
            8,
            "E6 has 36 positive roots",
            rs.positive_roots().len() == 36,
            format!("{} positive roots", rs.positive_roots().len()),
        ),
        Check::new(
            "c8.roots.maximal".into(),
            8,
            "maximal root is (1,2,2,3,2,1)",
            rs.maximal_root() == Root([1, 2, 2, 3, 2, 1]),
            rs.maximal_root().to_string(),
        ),
    ];
    let specs = family_l();
    out.extend(par(&specs, |spec| {
        let (ok, details) = match two_abelian_witness(&rs, spec) {
            Abelianity::TwoAbelian { alpha, beta } => {
                let w = verify_witness(&rs, spec, &alpha, &beta);
                (
                    w.is_height_two(),
                    format!("{alpha} + {beta} = {}, heights {:?}", w.sum, w.heights),
                )
            }
            other => (false, format!("{other:?}")),
        };
        vec![Check::new(
            format!("c8.two-abelian.{spec}"),
            8,
            "2-abelian with a height-2 witness pair",
            ok,
            details,
        )]
    }));
    for (i, w) in reference_witnesses().iter().enumerate() {
        let c = verify_witness(&rs, &w.spec, &w.alpha, &w.beta);
        let ok = c.is_height_two() && c.sum == w.claimed_sum;
        out.push(Check::new(
            format!("c8.reference.{:02}.{}", i + 1, w.spec),
            8,
            "recorded witness: heights 2, both in Phi2+, sum the recorded root",
            ok,
            format!(
                "{} + {}: heights {:?}, in Phi2+ ({}, {}), sum {} (recorded {}), sum in Phi2+ {}",
                w.alpha, w.beta, c.heights, c.alpha_in_phi2, c.beta_in_phi2, c.sum, w.claimed_sum, c.sum_in_phi2
            ),
        ));
    }
    let single = ParabolicSpec::new([1]).expect("valid");
    let verdict = two_abelian_witness(&rs, &single);
    out.push(Check::new(
        "c8.one-abelian.{1}".into(),
        8,
        "Delta1 = {1} is 1-abelian",
        verdict == Abelianity::OneAbelian,
        format!("{verdict:?}"),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_suite_shape() {
        let r = run(Suite::E6, &SuiteConfig::default());
        assert_eq!(r.summary.total, 2 + 16 + 11 + 1);
        assert!(r.criterion(8).count() == r.summary.total);
    }

    #[test]
    fn cocycle_suite_passes_at_seven() {
        let cfg = SuiteConfig {
            max_dim: 7,
            ..SuiteConfig::default()
        };
        let r = run(Suite::Cocycles, &cfg);
        assert!(r.all_passed(), "{}", r.to_text());
        assert_eq!(r.summary.total, 8);
    }

    #[test]
    fn instance_tags_sort_numerically() {
        let a = Instance {
            family: 2,
            n: 8,
            alpha: None,
        }
        .tag();
        let b = Instance {
            family: 10,
            n: 7,
            alpha: None,
        }
        .tag();
        assert!(a < b);
    }
}
