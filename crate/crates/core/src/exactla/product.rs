use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::matrix::{common_denominator, ExactMatrix};
use crate::error::{Error, Result};

/// A matrix as integer rows over one common denominator.
struct Scaled<T> {
    den: BigInt,
    rows: Vec<Vec<(usize, T)>>,
    /// Largest absolute numerator.
    max_abs: BigInt,
}

fn scaled_big(m: &ExactMatrix) -> Scaled<BigInt> {
    let den = common_denominator((0..m.rows()).flat_map(|i| m.row_nonzeros(i).into_iter().map(|(_, a)| a)));
    let mut max_abs = BigInt::zero();
    let rows: Vec<Vec<(usize, BigInt)>> = (0..m.rows())
        .map(|i| {
            m.row_nonzeros(i)
                .into_iter()
                .map(|(j, a)| {
                    let n = if One::is_one(&den) {
                        a.numer().clone()
                    } else {
                        a.numer() * (&den / a.denom())
                    };
                    if n.magnitude() > max_abs.magnitude() {
                        max_abs = n.abs();
                    }
                    (j, n)
                })
                .collect()
        })
        .collect();
    Scaled { den, rows, max_abs }
}

fn narrow<T: TryFrom<BigInt>>(s: &Scaled<BigInt>) -> Scaled<T> {
    Scaled {
        den: s.den.clone(),
        rows: s
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(j, v)| (*j, T::try_from(v.clone()).ok().expect("bounded")))
                    .collect()
            })
            .collect(),
        max_abs: s.max_abs.clone(),
    }
}

/// Whether every partial sum of `inner` products of entries bounded by
/// `a` and `b` stays below `limit`.
fn fits(a: &BigInt, b: &BigInt, inner: usize, limit: BigInt) -> bool {
    a * b * BigInt::from(inner.max(1)) < limit
}

fn dense_rows<T: Clone>(s: &Scaled<T>, cols: usize, zero: T) -> Vec<T> {
    let mut d = vec![zero; s.rows.len() * cols];
    for (k, row) in s.rows.iter().enumerate() {
        for (j, y) in row {
            d[k * cols + j] = y.clone();
        }
    }
    d
}

/// Product rows in a machine integer type known not to overflow.
fn product_rows_prim<T>(a: &Scaled<T>, b: &Scaled<T>, b_dense: Option<&[T]>, cols: usize) -> Vec<Vec<(usize, BigInt)>>
where
    T: Copy + Default + PartialEq + Send + Sync + std::ops::Mul<Output = T> + std::ops::AddAssign,
    BigInt: From<T>,
{
    let zero = T::default();
    a.rows
        .par_iter()
        .map(|row| {
            let mut acc = vec![zero; cols];
            for &(k, x) in row {
                match b_dense {
                    Some(d) => {
                        for (slot, &y) in acc.iter_mut().zip(&d[k * cols..(k + 1) * cols]) {
                            *slot += x * y;
                        }
                    }
                    None => {
                        for &(j, y) in &b.rows[k] {
                            acc[j] += x * y;
                        }
                    }
                }
            }
            acc.into_iter().enumerate().filter(|(_, v)| *v != zero).map(|(j, v)| (j, BigInt::from(v))).collect()
        })
        .collect()
}

fn product_rows_big(a: &Scaled<BigInt>, b: &Scaled<BigInt>, cols: usize) -> Vec<Vec<(usize, BigInt)>> {
    a.rows
        .par_iter()
        .map(|row| {
            let mut acc = vec![BigInt::zero(); cols];
            for (k, x) in row {
                for (j, y) in &b.rows[*k] {
                    acc[*j] += x * y;
                }
            }
            acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect()
}

fn from_scaled_rows(rows: usize, cols: usize, data: Vec<Vec<(usize, BigInt)>>, den: &BigInt, dense: bool) -> ExactMatrix {
    let data: Vec<Vec<(usize, BigRational)>> = data
        .into_par_iter()
        .map(|row| row.into_iter().map(|(j, v)| (j, BigRational::new(v, den.clone()))).collect())
        .collect();
    let out = ExactMatrix::from_sparse_rows(rows, cols, data).expect("shape is consistent");
    if dense {
        out.to_dense()
    } else {
        out
    }
}

/// Exact matrix product, dense unless both factors are sparse.
pub fn mat_product(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch {
            op: "matrix product",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let sa = scaled_big(a);
    let sb = scaled_big(b);
    let cols = b.cols();
    let inner = a.cols();
    let rows = if fits(&sa.max_abs, &sb.max_abs, inner, BigInt::from(i64::MAX)) {
        let (na, nb) = (narrow::<i64>(&sa), narrow::<i64>(&sb));
        let dense_b = (!b.is_sparse()).then(|| dense_rows(&nb, cols, 0i64));
        product_rows_prim(&na, &nb, dense_b.as_deref(), cols)
    } else if fits(&sa.max_abs, &sb.max_abs, inner, BigInt::from(i128::MAX)) {
        let (na, nb) = (narrow::<i128>(&sa), narrow::<i128>(&sb));
        let dense_b = (!b.is_sparse()).then(|| dense_rows(&nb, cols, 0i128));
        product_rows_prim(&na, &nb, dense_b.as_deref(), cols)
    } else {
        product_rows_big(&sa, &sb, cols)
    };
    let den = &sa.den * &sb.den;
    Ok(from_scaled_rows(a.rows(), cols, rows, &den, !(a.is_sparse() && b.is_sparse())))
}

/// `Σ c_k M_k` over a common denominator; dense unless every term is sparse.
pub fn linear_combination(terms: &[(BigRational, &ExactMatrix)]) -> Result<ExactMatrix> {
    let Some((_, first)) = terms.first() else {
        return Err(Error::InvalidParameters("empty linear combination".into()));
    };
    let shape = first.shape();
    if let Some((_, bad)) = terms.iter().find(|(_, m)| m.shape() != shape) {
        return Err(Error::DimensionMismatch {
            op: "linear combination",
            left: shape,
            right: bad.shape(),
        });
    }
    let scaled: Vec<Scaled<BigInt>> = terms.iter().map(|(_, m)| scaled_big(m)).collect();
    // term k contributes (c_k / den_k) * N_k; bring all to denominator L
    let factors: Vec<BigRational> = terms
        .iter()
        .zip(&scaled)
        .map(|((c, _), s)| c / BigRational::from_integer(s.den.clone()))
        .collect();
    let l = common_denominator(factors.iter());
    let weights: Vec<BigInt> = factors.iter().map(|f| (f * BigRational::from_integer(l.clone())).to_integer()).collect();
    let (rows, cols) = shape;
    let data: Vec<Vec<(usize, BigInt)>> = (0..rows)
        .into_par_iter()
        .map(|i| {
            let mut acc: Vec<BigInt> = vec![BigInt::zero(); cols];
            for (s, w) in scaled.iter().zip(&weights) {
                if w.is_zero() {
                    continue;
                }
                for (j, v) in &s.rows[i] {
                    acc[*j] += w * v;
                }
            }
            acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect();
    let all_sparse = terms.iter().all(|(_, m)| m.is_sparse());
    Ok(from_scaled_rows(rows, cols, data, &l, !all_sparse))
}

/// Entrywise product.
pub fn hadamard(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    if a.shape() != b.shape() {
        return Err(Error::DimensionMismatch {
            op: "Hadamard product",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let (drive, other) = if a.nnz() <= b.nnz() { (a, b) } else { (b, a) };
    let data: Vec<Vec<(usize, BigRational)>> = (0..a.rows())
        .into_par_iter()
        .map(|i| {
            let o = other.row_nonzeros(i);
            drive
                .row_nonzeros(i)
                .into_iter()
                .filter_map(|(j, x)| {
                    o.binary_search_by_key(&j, |&(c, _)| c).ok().map(|k| (j, x * o[k].1))
                })
                .collect()
        })
        .collect();
    let out = ExactMatrix::from_sparse_rows(a.rows(), a.cols(), data)?;
    Ok(if a.is_sparse() || b.is_sparse() { out } else { out.to_dense() })
}

/// `tr(M N)` without forming the product.
pub fn trace_of_product(m: &ExactMatrix, n: &ExactMatrix) -> Result<BigRational> {
    if m.cols() != n.rows() || m.rows() != n.cols() {
        return Err(Error::DimensionMismatch {
            op: "trace of product",
            left: m.shape(),
            right: n.shape(),
        });
    }
    let nt = n.transpose();
    Ok((0..m.rows())
        .into_par_iter()
        .map(|i| {
            let col = nt.row_nonzeros(i);
            m.row_nonzeros(i)
                .into_iter()
                .filter_map(|(j, x)| col.binary_search_by_key(&j, |&(c, _)| c).ok().map(|k| x * col[k].1))
                .fold(BigRational::zero(), |acc, v| acc + v)
        })
        .reduce(BigRational::zero, |a, b| a + b))
}
