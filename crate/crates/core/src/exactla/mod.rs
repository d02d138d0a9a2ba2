//! Exact rational linear algebra: sparse or dense matrices, products,
//! Hadamard products, rank, nullspaces and intersections of column spaces.
//!
//! Products and eliminations run on integer forms, first in checked `i128`
//! and, on overflow, again in `BigInt`.

mod elim;
mod int;
mod matrix;
mod product;

pub use elim::{column_space_ops, in_span, intersect_column_spaces, nullspace, rank, ColumnSpace, EchelonBasis};
pub use matrix::{ExactMatrix, ExactVector};
pub use product::{hadamard, linear_combination, mat_product, trace_of_product};

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    use super::*;

    fn rat(n: impl Into<BigInt>) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn small_matrix(rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix {
        ExactMatrix::from_dense(rows, cols, vals.iter().map(|&v| rat(v)).collect()).unwrap()
    }

    /// Schoolbook product straight from the definition.
    fn naive_product(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
        ExactMatrix::from_fn(a.rows(), b.cols(), |i, j| {
            (0..a.cols()).fold(BigRational::zero(), |acc, k| acc + a.get(i, k) * b.get(k, j))
        })
    }

    #[test]
    fn identity_and_zero_products() {
        let m = small_matrix(2, 3, &[1, -2, 3, 0, 5, 7]);
        assert_eq!(mat_product(&ExactMatrix::identity(2), &m).unwrap(), m);
        assert!(mat_product(&m, &ExactMatrix::zeros(3, 4)).unwrap().is_zero());
        assert!(matches!(mat_product(&m, &m), Err(crate::Error::DimensionMismatch { .. })));
    }

    #[test]
    fn hadamard_with_all_ones_and_zero() {
        let m = small_matrix(2, 2, &[1, 2, 3, 4]);
        let j = small_matrix(2, 2, &[1, 1, 1, 1]);
        assert_eq!(hadamard(&m, &j).unwrap(), m);
        assert!(hadamard(&m, &ExactMatrix::zeros(2, 2)).unwrap().is_zero());
        assert!(hadamard(&m, &ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn rank_of_identity_and_zero() {
        let cs = column_space_ops(&ExactMatrix::identity(5));
        assert_eq!(cs.rank, 5);
        assert!(cs.nullspace_basis.is_empty());
        let cs = column_space_ops(&ExactMatrix::zeros(3, 4));
        assert_eq!(cs.rank, 0);
        assert_eq!(cs.nullspace_basis.len(), 4);
    }

    #[test]
    fn overflowing_entries_fall_back_to_bigint() {
        let big = BigInt::from(10).pow(30);
        let m = ExactMatrix::from_dense(2, 2, vec![rat(big.clone()), rat(1), rat(1), rat(big.clone())]).unwrap();
        let p = mat_product(&m, &m).unwrap();
        assert_eq!(p, naive_product(&m, &m));
        assert_eq!(p.get(0, 0), rat(&big * &big + 1));
        let singular = ExactMatrix::from_dense(2, 2, vec![rat(big.clone()), rat(big.clone() + 1), rat(big.clone()), rat(big + 1)]).unwrap();
        assert_eq!(rank(&singular), 1);
    }

    #[test]
    fn complementary_coordinate_spaces_meet_trivially() {
        let a = vec![ExactVector::unit(4, 0), ExactVector::unit(4, 1)];
        let b = vec![ExactVector::unit(4, 2), ExactVector::unit(4, 3)];
        assert!(intersect_column_spaces(&a, &b).unwrap().is_empty());
        assert_eq!(intersect_column_spaces(&a, &a).unwrap().len(), 2);
    }

    #[test]
    fn primitive_clears_denominators() {
        let v = ExactVector::from_entries(vec![
            BigRational::new((-2).into(), 3.into()),
            BigRational::zero(),
            BigRational::new(4.into(), 9.into()),
        ]);
        assert_eq!(v.primitive(), ExactVector::from_integers([3, 0, -2]));
    }

    #[test]
    fn echelon_basis_membership() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&ExactVector::from_integers([1, 1, 0])).unwrap());
        assert!(e.insert(&ExactVector::from_integers([0, 1, 1])).unwrap());
        assert!(!e.insert(&ExactVector::from_integers([1, 2, 1])).unwrap());
        assert!(e.contains(&ExactVector::from_integers([2, 0, -2])).unwrap());
        assert!(!e.contains(&ExactVector::unit(3, 0)).unwrap());
        assert_eq!(e.rank(), 2);
    }

    fn matrix_strategy(max: usize) -> impl Strategy<Value = ExactMatrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c)
                .prop_map(move |v| small_matrix(r, c, &v))
        })
    }

    proptest! {
        #[test]
        fn product_matches_schoolbook(a in matrix_strategy(5), seed in 0u64..1000) {
            let cols = (seed % 4 + 1) as usize;
            let b = ExactMatrix::from_fn(a.cols(), cols, |i, j| {
                BigRational::new(BigInt::from((seed as i64 + 3 * i as i64 - 2 * j as i64) % 5), BigInt::from(1 + (i + j) as i64 % 3))
            });
            prop_assert_eq!(mat_product(&a, &b).unwrap(), naive_product(&a, &b));
            prop_assert_eq!(mat_product(&a.to_sparse(), &b.to_sparse()).unwrap(), naive_product(&a, &b));
        }

        #[test]
        fn nullspace_vectors_are_annihilated(m in matrix_strategy(6)) {
            let cs = column_space_ops(&m);
            prop_assert_eq!(cs.rank + cs.nullspace_basis.len(), m.cols());
            for v in &cs.nullspace_basis {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
            prop_assert_eq!(rank(&m.transpose()), cs.rank);
        }

        #[test]
        fn intersection_dimension_formula(a in matrix_strategy(5), b_seed in proptest::collection::vec(-2i64..=2, 25)) {
            let n = a.rows();
            let bcols = b_seed.len() / n.max(1);
            let bcols = bcols.min(4).max(1);
            let b = small_matrix(n, bcols, &b_seed[..n * bcols]);
            let (ca, cb) = (a.columns(), b.columns());
            let meet = intersect_column_spaces(&ca, &cb).unwrap();
            let mut both = ca.clone();
            both.extend(cb.iter().cloned());
            let joint = rank(&ExactMatrix::from_columns(n, &both).unwrap());
            prop_assert_eq!(meet.len() + joint, rank(&a) + rank(&b));
            for v in &meet {
                prop_assert!(in_span(&ca, v).unwrap());
                prop_assert!(in_span(&cb, v).unwrap());
            }
        }
    }

    #[test]
    fn trace_of_product_matches() {
        let a = small_matrix(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = small_matrix(3, 2, &[1, 0, -1, 2, 0, 1]);
        assert_eq!(trace_of_product(&a, &b).unwrap(), mat_product(&a, &b).unwrap().trace());
    }
}
