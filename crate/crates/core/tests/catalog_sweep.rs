use pfiliform::catalog::{build_family, build_g0, list_families, X1};
use pfiliform::derivations::{diagonal_torus, is_characteristically_nilpotent};
use pfiliform::exactlin::{q, unit_vec, Partition};

#[test]
fn every_family_to_dim_12() {
    let mut exceptions = Vec::new();
    for e in list_families() {
        let alphas = if e.takes_alpha() { vec![Some(q(1))] } else { vec![None] };
        for n in e.dims(7, 12) {
            for a in &alphas {
                let g = build_family(e.id, n, a.as_ref()).unwrap();
                assert!(g.is_lie(), "g{} n={n}", e.id);
                assert_eq!(g.commutativity_index(), Ok(2), "g{} n={n}", e.id);
                assert_eq!(g.derived_algebra().dim(), e.expected_derived_dim, "g{} n={n}", e.id);
                let hook = Partition::hook(5, n - 5);
                assert_eq!(g.char_seq_at(&unit_vec(n, X1)).unwrap(), hook);
                let est = g.char_seq_estimate(0, 16).unwrap();
                if est.partition != hook {
                    // Families 1-10 carry a bracket [Y, X_2] landing in the X-chain,
                    // so X_1 + cX_2 picks up an extra block. The witness must
                    // reproduce the partition on its own.
                    assert!(e.id <= 10 && est.partition > hook, "g{} n={n}: {}", e.id, est.partition);
                    assert_eq!(g.char_seq_at(&est.witness).unwrap(), est.partition);
                    exceptions.push(format!("g{}_{n}", e.id));
                }
            }
        }
    }
    let expected = [
        "g1_10", "g1_12", "g2_10", "g2_12", "g3_11", "g4_10", "g4_12", "g5_8", "g5_10", "g5_12", "g6_11", "g7_10",
        "g7_12", "g8_11", "g9_9", "g9_11", "g10_9", "g10_11",
    ];
    assert_eq!(exceptions, expected);
}

#[test]
fn g0_is_one_abelian() {
    for n in 7..=12 {
        assert_eq!(build_g0(n).unwrap().commutativity_index(), Ok(1));
    }
}

#[test]
fn cn_spot_checks() {
    let g = build_family(11, 7, None).unwrap();
    let r = is_characteristically_nilpotent(&g);
    assert!(r.characteristically_nilpotent);
    assert_eq!(r.torus_dim, 0);
    let g = build_family(13, 8, None).unwrap();
    assert!(!is_characteristically_nilpotent(&g).characteristically_nilpotent);
    let g0 = build_g0(7).unwrap();
    assert!(!is_characteristically_nilpotent(&g0).characteristically_nilpotent);
    assert_eq!(diagonal_torus(&g0).dim(), 3);
    assert!(diagonal_torus(&build_family(1, 8, None).unwrap()).dim() >= 1);
}
