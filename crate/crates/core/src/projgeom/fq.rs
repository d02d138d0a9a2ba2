//! Row reduction over `F_q` on small dense matrices.

use crate::qfield::{FieldContext, FieldElem};

/// Reduces `rows` (each of length `cols`) to reduced row echelon form in
/// place, drops zero rows and returns the pivot columns.
pub(crate) fn rref(f: &FieldContext, rows: &mut Vec<Vec<FieldElem>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).expect("nonzero pivot");
        if inv != 1 {
            for v in rows[r].iter_mut() {
                *v = f.mul(*v, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let factor = row[c];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                if p != 0 {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(f: &FieldContext, rows: &[Vec<FieldElem>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, cols).len()
}

/// Basis of `{ c : M c = 0 }` for `M` given by rows of length `cols`.
pub(crate) fn nullspace(f: &FieldContext, rows: &[Vec<FieldElem>], cols: usize) -> Vec<Vec<FieldElem>> {
    let mut m = rows.to_vec();
    let pivots = rref(f, &mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = f.neg(row[free]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let f = FieldContext::new(3).unwrap();
        let m = vec![vec![1, 2, 0, 1], vec![2, 1, 1, 0], vec![0, 0, 1, 1]];
        let ns = nullspace(&f, &m, 4);
        assert_eq!(rank(&f, &m, 4) + ns.len(), 4);
        for v in &ns {
            for row in &m {
                let s = row.iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(s, 0);
            }
        }
    }
}
