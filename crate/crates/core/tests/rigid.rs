use pfiliform::catalog::{build_gm, build_gm_factor, build_smk};
use pfiliform::exactlin::{unit_vec, Partition};

#[test]
fn gm_invariants() {
    for m in 4..=5 {
        let g = build_gm(m).unwrap();
        assert!(g.is_lie());
        assert_eq!(
            g.char_seq_at(&unit_vec(g.dim(), 0)).unwrap(),
            Partition::new(vec![2 * m - 1, 2, 1])
        );
        assert_eq!(g.commutativity_index(), Ok(m - 1));
    }
}

#[test]
fn factors_match_their_equations() {
    for m in 4..=5 {
        let g = build_gm(m).unwrap();
        let lcs = g.lower_central_series();
        for k in m..=2 * m - 2 {
            let q = g.quotient(&lcs[k]).unwrap();
            let direct = build_gm_factor(m, k).unwrap();
            assert_eq!(q.kept, (0..=k).chain([2 * m, 2 * m + 1]).collect::<Vec<_>>());
            assert!(q.algebra.brackets().eq(direct.brackets()), "m={m} k={k}");
            assert_eq!(direct.commutativity_index(), Ok(1));
            let est = direct.char_seq_estimate(0, 16).unwrap();
            assert_eq!(est.partition, Partition::new(vec![k, 2, 1]));
        }
    }
}

#[test]
fn smk_is_solvable_not_nilpotent() {
    let s = build_smk(4, 6).unwrap();
    assert!(s.is_lie());
    assert!(!s.is_nilpotent());
    // V1, V2, X1..X7, X9; the top vector X10 is factored out.
    assert_eq!(s.dim(), 2 + 7 + 1);
}
