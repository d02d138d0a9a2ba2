use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

/// Dense vector of exact rationals indexed by an ordered list of subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactVector {
    entries: Vec<BigRational>,
}

impl ExactVector {
    pub fn zeros(n: usize) -> Self {
        Self {
            entries: vec![BigRational::zero(); n],
        }
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[i] = BigRational::one();
        v
    }

    /// Characteristic vector of a set of indices.
    pub fn indicator(n: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(n);
        for i in support {
            v.entries[i] = BigRational::one();
        }
        v
    }

    pub fn from_entries(entries: Vec<BigRational>) -> Self {
        Self { entries }
    }

    pub fn from_integers<I: Into<BigInt>>(entries: impl IntoIterator<Item = I>) -> Self {
        Self {
            entries: entries.into_iter().map(|a| BigRational::from_integer(a.into())).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &BigRational {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: BigRational) {
        self.entries[i] = value;
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.entries[i].is_zero()).collect()
    }

    fn check_len(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op,
                left: (self.len(), 1),
                right: (other.len(), 1),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &Self) -> Result<BigRational> {
        self.check_len(other, "dot")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector add")?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other, "vector sub")?;
        Ok(Self {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &BigRational, other: &Self) -> Result<()> {
        self.check_len(other, "vector axpy")?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
        Ok(())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// The same line scaled to coprime integers with a positive leading entry.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.entries.iter().find(|a| !a.is_zero()) else {
            return self.clone();
        };
        let den = common_denominator(self.entries.iter());
        let mut factor = BigRational::from_integer(den.clone());
        let mut g = BigInt::zero();
        for a in &self.entries {
            if !a.is_zero() {
                g = g.gcd(&(a.numer() * (&den / a.denom())));
            }
        }
        factor /= BigRational::from_integer(g);
        if lead < &BigRational::zero() {
            factor = -factor;
        }
        self.scale(&factor)
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

pub(crate) fn common_denominator<'a>(entries: impl Iterator<Item = &'a BigRational>) -> BigInt {
    let mut den = BigInt::one();
    for a in entries {
        if !a.denom().is_one() {
            den = den.lcm(a.denom());
        }
    }
    den
}

#[derive(Clone)]
enum Storage {
    Dense(Vec<BigRational>),
    /// Row lists of `(column, nonzero value)`, sorted by column.
    Sparse(Vec<Vec<(usize, BigRational)>>),
}

/// Exact rational matrix; sparse or dense storage, compared by value.
#[derive(Clone)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            storage: Storage::Sparse(vec![Vec::new(); rows]),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| BigRational::one()).collect())
    }

    pub fn diagonal(diag: Vec<BigRational>) -> Self {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, a)| if a.is_zero() { Vec::new() } else { vec![(i, a)] })
            .collect();
        Self {
            rows: n,
            cols: n,
            storage: Storage::Sparse(rows),
        }
    }

    /// Row-major dense data.
    pub fn from_dense(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                op: "dense construction",
                left: (rows, cols),
                right: (data.len(), 1),
            });
        }
        Ok(Self {
            rows,
            cols,
            storage: Storage::Dense(data),
        })
    }

    /// Sparse rows of `(column, value)`; zeros are dropped and columns sorted.
    pub fn from_sparse_rows(rows: usize, cols: usize, mut data: Vec<Vec<(usize, BigRational)>>) -> Result<Self> {
        if data.len() != rows || data.iter().flatten().any(|&(c, _)| c >= cols) {
            return Err(Error::DimensionMismatch {
                op: "sparse construction",
                left: (rows, cols),
                right: (data.len(), 0),
            });
        }
        for row in &mut data {
            row.retain(|(_, a)| !a.is_zero());
            row.sort_by_key(|&(c, _)| c);
            row.dedup_by(|b, a| {
                if a.0 == b.0 {
                    a.1 += &b.1;
                    true
                } else {
                    false
                }
            });
            row.retain(|(_, a)| !a.is_zero());
        }
        Ok(Self {
            rows,
            cols,
            storage: Storage::Sparse(data),
        })
    }

    /// 0/1 matrix from the column positions of its ones in each row.
    pub fn from_pattern(rows: usize, cols: usize, pattern: &[Vec<usize>]) -> Result<Self> {
        let data = pattern
            .iter()
            .map(|r| r.iter().map(|&c| (c, BigRational::one())).collect())
            .collect();
        Self::from_sparse_rows(rows, cols, data)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[ExactVector]) -> Result<Self> {
        if let Some(bad) = columns.iter().find(|v| v.len() != len) {
            return Err(Error::DimensionMismatch {
                op: "column construction",
                left: (len, columns.len()),
                right: (bad.len(), 1),
            });
        }
        let mut rows = vec![Vec::new(); len];
        for (j, v) in columns.iter().enumerate() {
            for (i, a) in v.entries.iter().enumerate() {
                if !a.is_zero() {
                    rows[i].push((j, a.clone()));
                }
            }
        }
        Ok(Self {
            rows: len,
            cols: columns.len(),
            storage: Storage::Sparse(rows),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigRational + Sync) -> Self {
        let data = (0..rows * cols).into_par_iter().map(|k| f(k / cols, k % cols)).collect();
        Self {
            rows,
            cols,
            storage: Storage::Dense(data),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn nnz(&self) -> usize {
        match &self.storage {
            Storage::Dense(d) => d.iter().filter(|a| !a.is_zero()).count(),
            Storage::Sparse(r) => r.iter().map(Vec::len).sum(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        match &self.storage {
            Storage::Dense(d) => d[i * self.cols + j].clone(),
            Storage::Sparse(r) => r[i]
                .binary_search_by_key(&j, |&(c, _)| c)
                .map_or_else(|_| BigRational::zero(), |k| r[i][k].1.clone()),
        }
    }

    /// Nonzero entries of row `i` in column order.
    pub fn row_nonzeros(&self, i: usize) -> Vec<(usize, &BigRational)> {
        match &self.storage {
            Storage::Dense(d) => d[i * self.cols..(i + 1) * self.cols]
                .iter()
                .enumerate()
                .filter(|(_, a)| !a.is_zero())
                .collect(),
            Storage::Sparse(r) => r[i].iter().map(|(c, a)| (*c, a)).collect(),
        }
    }

    pub fn for_each_nonzero(&self, mut f: impl FnMut(usize, usize, &BigRational)) {
        for i in 0..self.rows {
            for (j, a) in self.row_nonzeros(i) {
                f(i, j, a);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(d) => d.iter().all(Zero::is_zero),
            Storage::Sparse(r) => r.iter().all(Vec::is_empty),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        match &self.storage {
            Storage::Dense(d) => (0..self.rows).all(|i| (0..i).all(|j| d[i * self.cols + j] == d[j * self.cols + i])),
            Storage::Sparse(_) => *self == self.transpose(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                let nz = self.row_nonzeros(i);
                nz.len() == 1 && nz[0].0 == i && nz[0].1.is_one()
            })
    }

    pub fn to_dense(&self) -> Self {
        match &self.storage {
            Storage::Dense(_) => self.clone(),
            Storage::Sparse(r) => {
                let mut d = vec![BigRational::zero(); self.rows * self.cols];
                for (i, row) in r.iter().enumerate() {
                    for (j, a) in row {
                        d[i * self.cols + j] = a.clone();
                    }
                }
                Self {
                    rows: self.rows,
                    cols: self.cols,
                    storage: Storage::Dense(d),
                }
            }
        }
    }

    pub fn to_sparse(&self) -> Self {
        match &self.storage {
            Storage::Sparse(_) => self.clone(),
            Storage::Dense(_) => Self {
                rows: self.rows,
                cols: self.cols,
                storage: Storage::Sparse(
                    (0..self.rows)
                        .map(|i| self.row_nonzeros(i).into_iter().map(|(c, a)| (c, a.clone())).collect())
                        .collect(),
                ),
            },
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = vec![Vec::new(); self.cols];
        self.for_each_nonzero(|i, j, a| t[j].push((i, a.clone())));
        let out = Self {
            rows: self.cols,
            cols: self.rows,
            storage: Storage::Sparse(t),
        };
        if self.is_sparse() {
            out
        } else {
            out.to_dense()
        }
    }

    pub fn column(&self, j: usize) -> ExactVector {
        ExactVector::from_entries((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    pub fn columns(&self) -> Vec<ExactVector> {
        let mut cols = vec![ExactVector::zeros(self.rows); self.cols];
        self.for_each_nonzero(|i, j, a| cols[j].entries[i] = a.clone());
        cols
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols)).fold(BigRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let storage = match &self.storage {
            Storage::Dense(d) => Storage::Dense(d.par_iter().map(|a| a * c).collect()),
            Storage::Sparse(r) => Storage::Sparse(
                r.iter().map(|row| row.iter().map(|(j, a)| (*j, a * c)).collect()).collect(),
            ),
        };
        Self {
            rows: self.rows,
            cols: self.cols,
            storage,
        }
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &BigRational, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "matrix add")?;
        match (&self.storage, &other.storage) {
            (Storage::Sparse(a), Storage::Sparse(b)) => {
                let rows = a
                    .iter()
                    .zip(b)
                    .map(|(ra, rb)| {
                        let mut row: Vec<(usize, BigRational)> = ra.clone();
                        row.extend(rb.iter().map(|(j, v)| (*j, v * c)));
                        row
                    })
                    .collect();
                Self::from_sparse_rows(self.rows, self.cols, rows)
            }
            _ => super::product::linear_combination(&[(BigRational::one(), self), (c.clone(), other)]),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&BigRational::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&-BigRational::one(), other)
    }

    /// `self - c I`.
    pub fn shift_diagonal(&self, c: &BigRational) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                op: "diagonal shift",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let ident = Self::identity(self.rows);
        self.add_scaled(&-c, &ident)
    }

    pub fn mul_vec(&self, v: &ExactVector) -> Result<ExactVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "matrix-vector product",
                left: self.shape(),
                right: (v.len(), 1),
            });
        }
        let out = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                self.row_nonzeros(i)
                    .into_iter()
                    .filter(|(j, _)| !v.entries[*j].is_zero())
                    .fold(BigRational::zero(), |acc, (j, a)| acc + a * &v.entries[j])
            })
            .collect();
        Ok(ExactVector::from_entries(out))
    }

    /// Rows restricted to `rows`, columns restricted to `cols`, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&i| {
                self.row_nonzeros(i)
                    .into_iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, a)| (pos[j], a.clone()))
                    .collect()
            })
            .collect();
        Self::from_sparse_rows(rows.len(), cols.len(), data).expect("indices in range")
    }
}

impl PartialEq for ExactMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.shape() == other.shape()
            && (0..self.rows).all(|i| {
                let a = self.row_nonzeros(i);
                let b = other.row_nonzeros(i);
                a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1)
            })
    }
}

impl Eq for ExactMatrix {}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} ({})", self.rows, self.cols, if self.is_sparse() { "sparse" } else { "dense" })?;
        if self.rows * self.cols <= 400 {
            for i in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                writeln!(f, "  [{}]", row.join(" "))?;
            }
        }
        Ok(())
    }
}
