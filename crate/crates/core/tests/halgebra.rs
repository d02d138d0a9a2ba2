use num_bigint::BigInt;
use qgrass_core::halgebra::{build_poset_matrices, poset_size, DEFAULT_POSET_CAP};
use qgrass_core::projgeom::{GeometryContext, GeometryOptions};
use qgrass_core::qfield::{FieldContext, SqrtQScalar};

fn full(q: u64, n: usize, d: usize) -> GeometryContext {
    GeometryContext::build_full(FieldContext::new(q).unwrap(), n, d, None, &GeometryOptions::default()).unwrap()
}

#[test]
fn generators_for_q2_n5() {
    let ctx = full(2, 5, 2);
    let set = build_poset_matrices(&ctx, DEFAULT_POSET_CAP).unwrap();
    assert!(set.is_full());
    assert_eq!(set.len(), 374);
    assert_eq!(poset_size(2, 5), BigInt::from(374));
    assert!(set.checks().all_passed(), "{:?}", set.checks());
    assert!(set.checks().find("(L_1 + L_2)_uv = 1 iff v covers u").is_some());
    let x = set.index_of(qgrass_core::projgeom::SubspaceRef { dim: 2, index: 0 });
    assert!(x.is_some());
}

#[test]
fn k1_at_x_is_q_to_minus_half_d() {
    let ctx = full(3, 4, 1);
    let set = build_poset_matrices(&ctx, DEFAULT_POSET_CAP).unwrap();
    assert!(set.checks().all_passed(), "{:?}", set.checks());
    let xi = ctx.table(1).unwrap().index_of(ctx.x()).unwrap();
    let gx = set.index_of(qgrass_core::projgeom::SubspaceRef { dim: 1, index: xi }).unwrap();
    assert_eq!(set.k1[gx], SqrtQScalar::q_power(3, -1));
}

#[test]
fn layers_only_when_poset_is_large() {
    let f = FieldContext::new(2).unwrap();
    let ctx = GeometryContext::build(f, 6, 2, None, &[1, 2, 3], &GeometryOptions::default()).unwrap();
    let set = build_poset_matrices(&ctx, DEFAULT_POSET_CAP).unwrap();
    assert!(!set.is_full());
    assert_eq!(set.layers(), &[1, 2, 3]);
    assert_eq!(set.len(), 63 + 651 + 1395);
    assert!(set.checks().all_passed(), "{:?}", set.checks());
    assert!(build_poset_matrices(&ctx, 1000).is_err());
}
