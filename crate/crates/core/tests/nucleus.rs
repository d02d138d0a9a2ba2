use qgrass_core::grassmann::{build_graph, spectral_system, GraphOptions};
use qgrass_core::nucleus::{
    alpha_family, boundary_case_report, compute_nucleus, connectivity_check, gamma_components, verify_actions,
    verify_bases,
};
use qgrass_core::Verdict;

fn assert_passed(checks: &qgrass_core::CheckList) {
    let failed: Vec<_> = checks.failures().collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn j2_5_2_nucleus() {
    let gc = build_graph(2, 5, 2, &GraphOptions::default()).unwrap();
    let ss = spectral_system(&gc).unwrap();
    let nd = compute_nucleus(&ss).unwrap();
    assert_passed(nd.checks());
    assert_eq!(nd.dims, vec![1, 3, 1]);
    assert_eq!(nd.mult_r, vec![1, 2]);
    // N_0 is spanned by the indicator of x, N_D by the all-ones vector
    assert_eq!(nd.bases[0][0].support(), vec![gc.x_vertex()]);
    assert_eq!(nd.bases[2][0].support().len(), 155);

    let fam = alpha_family(&gc);
    assert_passed(fam.checks());
    assert_eq!(fam.len(), 5);
    for a in fam.of_dim(1) {
        assert_eq!(fam.h_sets[a].len(), 15);
        assert_eq!(fam.g_sets[a].len(), 14);
    }
    assert_eq!(fam.g_sets[fam.of_dim(0)[0]].len(), 112);
    assert_eq!(fam.h_sets[fam.of_dim(0)[0]].len(), 155);

    let actions = verify_actions(&gc.adjacency_matrix(), &ss, &fam).unwrap();
    assert_passed(&actions.checks);
    for r in [&actions.a_vee, &actions.a_nuc, &actions.astar_nuc, &actions.astar_vee] {
        assert_eq!((r.verdict, r.checked), (Verdict::Pass, 5));
    }

    let bases = verify_bases(&nd, &fam, 2).unwrap();
    assert_passed(&bases.checks);
    assert!(bases.vee.is_basis && bases.nuc.is_basis && bases.transitions_inverse);

    let counts: Vec<usize> = (0..=2).map(|i| gamma_components(&gc, &fam, i).count()).collect();
    assert_eq!(counts, vec![1, 3, 1]);
    let g1 = gamma_components(&gc, &fam, 1);
    assert_passed(&g1.checks);
    assert_eq!(g1.sizes(), vec![14, 14, 14]);
    let g2 = gamma_components(&gc, &fam, 2);
    assert_passed(&g2.checks);
    assert_eq!(g2.sizes(), vec![112]);
    assert_passed(&connectivity_check(&gc, &fam));
}

#[test]
fn q3_complete_graph_nucleus() {
    let gc = build_graph(3, 4, 1, &GraphOptions::default()).unwrap();
    let ss = spectral_system(&gc).unwrap();
    let nd = compute_nucleus(&ss).unwrap();
    assert_passed(nd.checks());
    assert_eq!(nd.dims, vec![1, 1]);
    let fam = alpha_family(&gc);
    assert_passed(fam.checks());
    assert_passed(&verify_actions(&gc.adjacency_matrix(), &ss, &fam).unwrap().checks);
    assert_passed(&verify_bases(&nd, &fam, 3).unwrap().checks);
}

#[test]
fn broken_family_is_detected() {
    let gc = build_graph(2, 5, 2, &GraphOptions::default()).unwrap();
    let ss = spectral_system(&gc).unwrap();
    let mut fam = alpha_family(&gc);
    let a = fam.of_dim(1)[0];
    fam.nuc[a] = fam.vee[a].clone();
    let actions = verify_actions(&gc.adjacency_matrix(), &ss, &fam).unwrap();
    assert_eq!(actions.astar_nuc.verdict, Verdict::Fail);
    assert!(actions.astar_nuc.nonzero_at.contains(&a));
}

#[test]
fn boundary_j2_4_2_records_observations() {
    let gc = build_graph(2, 4, 2, &GraphOptions::default()).unwrap();
    let report = boundary_case_report(&gc).unwrap();
    assert!(report.checks.iter().all(|c| c.verdict == Verdict::Observed));
    assert_eq!(report.nucleus_dims[0], 1);
    assert_eq!(report.n_alpha, 5);

    let other = build_graph(2, 5, 2, &GraphOptions::default()).unwrap();
    assert!(boundary_case_report(&other).is_err());
}

mod properties {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(6))]

        #[test]
        fn diameter_one_nucleus(q in prop::sample::select(vec![2u64, 3]), n in 3usize..5) {
            let gc = build_graph(q, n, 1, &GraphOptions::default()).unwrap();
            let ss = spectral_system(&gc).unwrap();
            let nd = compute_nucleus(&ss).unwrap();
            prop_assert!(nd.checks().all_passed());
            prop_assert_eq!(&nd.dims, &vec![1, 1]);
            let fam = alpha_family(&gc);
            prop_assert!(fam.checks().all_passed());
            prop_assert!(verify_actions(&gc.adjacency_matrix(), &ss, &fam).unwrap().checks.all_passed());
            prop_assert!(verify_bases(&nd, &fam, q).unwrap().checks.all_passed());
        }
    }
}
