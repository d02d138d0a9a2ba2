use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::int::{self, remove_content};
use super::matrix::{common_denominator, ExactMatrix, ExactVector};
use crate::error::{Error, Result};

/// Rank, a basis of the column space drawn from the columns of the input,
/// and a basis of the right nullspace.
#[derive(Clone, Debug)]
pub struct ColumnSpace {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    pub column_basis: Vec<ExactVector>,
    pub nullspace_basis: Vec<ExactVector>,
}

/// Each row scaled by its own denominator lcm; row scaling does not change
/// the nullspace or the pivot columns.
fn integer_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .into_par_iter()
        .map(|i| {
            let nz = m.row_nonzeros(i);
            let den = common_denominator(nz.iter().map(|(_, a)| *a));
            let mut row = vec![BigInt::zero(); m.cols()];
            for (j, a) in nz {
                row[j] = if den.is_one() {
                    a.numer().clone()
                } else {
                    a.numer() * (&den / a.denom())
                };
            }
            row
        })
        .collect()
}

/// Reduced rows as `(pivot column, row)`, in pivot order.
type Reduced<T> = Vec<(usize, Vec<T>)>;

/// Fraction-free Gauss–Jordan elimination with row content removal.
/// Only rows with a nonzero entry in the pivot column are touched.
/// Returns `None` if an intermediate value overflows `T`.
fn gauss_jordan<T: int::IntScalar>(rows: &[Vec<BigInt>], cols: usize) -> Option<Reduced<T>> {
    let mut rows: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(T::from_big).collect::<Option<Vec<T>>>())
        .collect::<Option<_>>()?;
    rows.retain(|r| r.iter().any(|a| !a.is_zero()));
    for r in rows.iter_mut() {
        remove_content(r);
    }
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; rows.len()];
    for c in 0..cols {
        if pivots.len() == rows.len() {
            break;
        }
        let Some(r) = (0..rows.len()).find(|&r| !used[r] && !rows[r][c].is_zero()) else {
            continue;
        };
        used[r] = true;
        pivots.push((c, r));
        let p = std::mem::take(&mut rows[r]);
        let pc = p[c].clone();
        let ok = rows.par_iter_mut().all(|s| {
            if s.is_empty() || s[c].is_zero() {
                return true;
            }
            let sc = s[c].clone();
            for (k, sk) in s.iter_mut().enumerate() {
                let pk = &p[k];
                if pk.is_zero() {
                    if !sk.is_zero() && !pc.is_one() {
                        match T::cross(&pc, sk, &T::zero(), &T::zero()) {
                            Some(v) => *sk = v,
                            None => return false,
                        }
                    }
                } else {
                    match T::cross(&pc, sk, &sc, pk) {
                        Some(v) => *sk = v,
                        None => return false,
                    }
                }
            }
            remove_content(s);
            true
        });
        if !ok {
            return None;
        }
        rows[r] = p;
    }
    Some(pivots.into_iter().map(|(c, r)| (c, std::mem::take(&mut rows[r]))).collect())
}

fn reduce(m: &ExactMatrix) -> Reduced<BigInt> {
    let rows = integer_rows(m);
    if let Some(red) = gauss_jordan::<i128>(&rows, m.cols()) {
        return red.into_iter().map(|(c, r)| (c, r.iter().map(int::IntScalar::to_big).collect())).collect();
    }
    gauss_jordan::<BigInt>(&rows, m.cols()).expect("unbounded integers never overflow")
}

fn nullspace_from(red: &Reduced<BigInt>, cols: usize) -> Vec<ExactVector> {
    let mut is_pivot = vec![false; cols];
    for (c, _) in red {
        is_pivot[*c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = ExactVector::zeros(cols);
            v.set(f, BigRational::one());
            for (c, row) in red {
                if !row[f].is_zero() {
                    v.set(*c, -BigRational::new(row[f].clone(), row[*c].clone()));
                }
            }
            v.primitive()
        })
        .collect()
}

pub fn column_space_ops(m: &ExactMatrix) -> ColumnSpace {
    let red = reduce(m);
    let pivot_columns: Vec<usize> = red.iter().map(|(c, _)| *c).collect();
    let columns = m.submatrix(&(0..m.rows()).collect::<Vec<_>>(), &pivot_columns).columns();
    ColumnSpace {
        rank: pivot_columns.len(),
        nullspace_basis: nullspace_from(&red, m.cols()),
        column_basis: columns,
        pivot_columns,
    }
}

pub fn rank(m: &ExactMatrix) -> usize {
    reduce(m).len()
}

/// Basis of the right nullspace.
pub fn nullspace(m: &ExactMatrix) -> Vec<ExactVector> {
    nullspace_from(&reduce(m), m.cols())
}

/// Basis of `span(a) ∩ span(b)` from the nullspace of `[a | -b]`.
pub fn intersect_column_spaces(a: &[ExactVector], b: &[ExactVector]) -> Result<Vec<ExactVector>> {
    let Some(n) = a.first().or(b.first()).map(ExactVector::len) else {
        return Ok(Vec::new());
    };
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut cols: Vec<ExactVector> = a.to_vec();
    cols.extend(b.iter().map(|v| v.scale(&-BigRational::one())));
    let k = ExactMatrix::from_columns(n, &cols)?;
    let mut basis = EchelonBasis::new(n);
    let mut out = Vec::new();
    for z in nullspace(&k) {
        let mut v = ExactVector::zeros(n);
        for (i, col) in a.iter().enumerate() {
            v.add_scaled(z.get(i), col)?;
        }
        if basis.insert(&v)? {
            out.push(v.primitive());
        }
    }
    Ok(out)
}

/// Incrementally built echelon basis of a subspace of `Q^n`.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    /// `(pivot, integer vector)` sorted by pivot; each vector vanishes before its pivot.
    vectors: Vec<(usize, Vec<BigInt>)>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        Self { len, vectors: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    fn to_integers(&self, v: &ExactVector) -> Result<Vec<BigInt>> {
        if v.len() != self.len {
            return Err(Error::DimensionMismatch {
                op: "echelon basis",
                left: (self.len, 1),
                right: (v.len(), 1),
            });
        }
        let den = common_denominator(v.entries().iter());
        Ok(v.entries()
            .iter()
            .map(|a| if a.is_zero() { BigInt::zero() } else { a.numer() * (&den / a.denom()) })
            .collect())
    }

    fn residual(&self, mut w: Vec<BigInt>) -> Vec<BigInt> {
        for (p, b) in &self.vectors {
            if w[*p].is_zero() {
                continue;
            }
            let (wp, bp) = (w[*p].clone(), &b[*p]);
            for (x, y) in w.iter_mut().zip(b) {
                if !x.is_zero() || !y.is_zero() {
                    *x = &*x * bp - &wp * y;
                }
            }
            remove_content(&mut w);
        }
        w
    }

    /// Adds `v`; returns whether it was independent of the current basis.
    pub fn insert(&mut self, v: &ExactVector) -> Result<bool> {
        let w = self.residual(self.to_integers(v)?);
        let Some(p) = w.iter().position(|a| !a.is_zero()) else {
            return Ok(false);
        };
        let at = self.vectors.partition_point(|(q, _)| *q < p);
        self.vectors.insert(at, (p, w));
        Ok(true)
    }

    pub fn contains(&self, v: &ExactVector) -> Result<bool> {
        Ok(self.residual(self.to_integers(v)?).iter().all(Zero::is_zero))
    }
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(basis: &[ExactVector], v: &ExactVector) -> Result<bool> {
    let mut e = EchelonBasis::new(v.len());
    for b in basis {
        e.insert(b)?;
    }
    e.contains(v)
}
