use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use qgrass_core::exactla::{column_space_ops, hadamard, mat_product, ExactMatrix};
use qgrass_core::grassmann::{
    build_graph, intersection_numbers, krein_qpoly_check, spectral_system, GraphOptions, TModuleParams,
    tmodule_intersection_numbers,
};

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

#[test]
fn j2_5_2_full_apparatus() {
    let gc = build_graph(2, 5, 2, &GraphOptions::default()).unwrap();
    assert!(gc.checks().all_passed(), "{:?}", gc.checks());
    assert_eq!(gc.n_vertices(), 155);
    assert!((0..155).all(|y| gc.neighbors(y).len() == 42));

    let ints = intersection_numbers(&gc).unwrap();
    assert!(ints.checks.all_passed(), "{:?}", ints.checks);
    assert_eq!((ints.k.clone(), ints.b[1].clone(), ints.c[2].clone()), (int(42), int(24), int(9)));

    let ss = spectral_system(&gc).unwrap();
    assert!(ss.checks().all_passed(), "{:?}", ss.checks());
    assert_eq!(ss.theta(), &[int(42), int(11), int(-3)]);
    assert_eq!(ss.mult(), &[1, 30, 124]);
    assert_eq!(ss.theta_star()[0], BigRational::from_integer(int(30)));
    assert!(mat_product(ss.idempotent(1), ss.idempotent(2)).unwrap().is_zero());

    // θ_0-eigenspace is one-dimensional
    let shifted = gc.adjacency_matrix().shift_diagonal(&BigRational::from_integer(int(42))).unwrap();
    assert_eq!(column_space_ops(&shifted).rank, 154);

    let e0 = ss.idempotent(0);
    let j = ExactMatrix::from_fn(155, 155, |_, _| BigRational::from_integer(int(1)));
    let expected = j.scale(&BigRational::new(int(1), int(155 * 155)));
    assert_eq!(hadamard(e0, e0).unwrap(), expected);

    let kr = krein_qpoly_check(&ss).unwrap();
    assert!(kr.checks.all_passed(), "{:?}", kr.checks);
    assert!(!kr.get(2, 1, 1).is_zero());
    assert!(kr.get(2, 1, 0).is_zero());
    assert!(kr.get(0, 1, 2).is_zero());

    for i in 0..=2 {
        let (a, b, c) = tmodule_intersection_numbers(2, 5, 2, TModuleParams::primary(2), i).unwrap();
        let u = i as usize;
        assert_eq!(a, BigRational::from_integer(ints.a[u].clone()));
        assert_eq!(b, BigRational::from_integer(ints.b[u].clone()));
        assert_eq!(c, BigRational::from_integer(ints.c[u].clone()));
    }
}

#[test]
fn lines_give_complete_graphs() {
    for (q, n, size) in [(3u64, 4usize, 40usize), (2, 3, 7)] {
        let gc = build_graph(q, n, 1, &GraphOptions::default()).unwrap();
        assert!(gc.checks().all_passed());
        assert_eq!(gc.n_vertices(), size);
        assert!((0..size).all(|y| gc.neighbors(y).len() == size - 1));
        let ss = spectral_system(&gc).unwrap();
        assert!(ss.checks().all_passed(), "{:?}", ss.checks());
        assert_eq!(ss.mult(), &[1, size - 1]);
    }
}

#[test]
fn boundary_graph_builds() {
    let gc = build_graph(2, 4, 2, &GraphOptions::default()).unwrap();
    assert!(gc.is_boundary());
    assert_eq!(gc.n_vertices(), 35);
    let ss = spectral_system(&gc).unwrap();
    assert!(ss.checks().all_passed(), "{:?}", ss.checks());
}

#[test]
fn rejects_invalid_and_oversized_requests() {
    use qgrass_core::Error;
    assert!(matches!(build_graph(2, 5, 3, &GraphOptions::default()), Err(Error::InvalidParameters(_))));
    assert!(matches!(build_graph(2, 2, 2, &GraphOptions::default()), Err(Error::InvalidParameters(_))));
    assert!(matches!(build_graph(4, 5, 2, &GraphOptions::default()), Err(Error::NonPrimeModulus(4))));
    let small = GraphOptions { max_vertices: 100, ..GraphOptions::default() };
    assert!(matches!(build_graph(2, 5, 2, &small), Err(Error::SizeCapExceeded { .. })));
}
