//! Plain-text cache of one dimension table.
//!
//! Header line: `q N l count`. Each following line holds one subspace as
//! its dimension, a space, then the row-major basis entries written as
//! base-36 digits with no separator.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::subspace::CanonicalSubspace;
use crate::error::{Error, Result};
use crate::qfield::{q_binomial, FieldContext, FieldElem};

pub fn cache_file_name(q: u64, n: usize, l: usize) -> String {
    format!("subspaces_q{q}_n{n}_l{l}.txt")
}

fn cache_err(path: &Path, reason: impl Into<String>) -> Error {
    Error::Cache {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

pub fn write_table(path: &Path, f: &FieldContext, n: usize, l: usize, items: &[CanonicalSubspace]) -> Result<()> {
    if f.q() > 36 {
        return Err(cache_err(path, "cache digits only cover q <= 36"));
    }
    let mut w = BufWriter::new(fs::File::create(path)?);
    writeln!(w, "{} {} {} {}", f.q(), n, l, items.len())?;
    for u in items {
        let digits: String = u
            .flat_rows()
            .iter()
            .map(|&a| char::from_digit(a, 36).expect("digit below 36"))
            .collect();
        writeln!(w, "{} {}", u.dim(), digits)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_table(path: &Path, f: &FieldContext, n: usize, l: usize) -> Result<Vec<CanonicalSubspace>> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines();
    let header: Vec<u64> = lines
        .next()
        .ok_or_else(|| cache_err(path, "empty file"))?
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| cache_err(path, "malformed header")))
        .collect::<Result<_>>()?;
    if header.len() != 4 {
        return Err(cache_err(path, "header must be `q N l count`"));
    }
    if header[0] != u64::from(f.q()) || header[1] != n as u64 || header[2] != l as u64 {
        return Err(cache_err(path, format!("header {header:?} does not match q={} N={n} l={l}", f.q())));
    }
    let want = q_binomial(n as i64, l as i64, u64::from(f.q()));
    if num_bigint::BigInt::from(header[3]) != want {
        return Err(cache_err(path, format!("count {} but the table must hold {want}", header[3])));
    }
    let mut items = Vec::with_capacity(header[3] as usize);
    for (lineno, line) in lines.enumerate() {
        let (dim, digits) = line.split_once(' ').unwrap_or((line, ""));
        let dim: usize = dim.parse().map_err(|_| cache_err(path, format!("line {}: bad dimension", lineno + 2)))?;
        let entries: Vec<FieldElem> = digits
            .chars()
            .map(|c| c.to_digit(36).filter(|&a| a < f.q()))
            .collect::<Option<_>>()
            .ok_or_else(|| cache_err(path, format!("line {}: bad digit", lineno + 2)))?;
        if dim != l || entries.len() != l * n {
            return Err(cache_err(path, format!("line {}: wrong shape", lineno + 2)));
        }
        let rows: Vec<Vec<FieldElem>> = entries.chunks(n.max(1)).map(<[_]>::to_vec).collect();
        let u = CanonicalSubspace::from_spanning(f, n, &rows);
        if u.dim() != l || u.flat_rows() != entries.as_slice() {
            return Err(cache_err(path, format!("line {}: not in reduced row echelon form", lineno + 2)));
        }
        items.push(u);
    }
    if num_bigint::BigInt::from(items.len()) != want {
        return Err(cache_err(path, format!("found {} subspaces, expected {want}", items.len())));
    }
    if items.windows(2).any(|w| w[0] >= w[1]) {
        return Err(cache_err(path, "entries are not in canonical order"));
    }
    Ok(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projgeom::enumerate_subspaces;

    #[test]
    fn write_then_read() {
        let f = FieldContext::new(3).unwrap();
        let dir = tempfile::tempdir().unwrap();
        for l in 0..=4 {
            let t = enumerate_subspaces(&f, 4, l, 1000).unwrap();
            let p = dir.path().join(cache_file_name(3, 4, l));
            write_table(&p, &f, 4, l, &t).unwrap();
            assert_eq!(read_table(&p, &f, 4, l).unwrap(), t);
        }
    }

    #[test]
    fn rejects_truncated_and_mismatched() {
        let f = FieldContext::new(2).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let t = enumerate_subspaces(&f, 4, 2, 1000).unwrap();
        let p = dir.path().join("t.txt");
        write_table(&p, &f, 4, 2, &t).unwrap();
        assert!(read_table(&p, &f, 4, 1).is_err());
        let text = fs::read_to_string(&p).unwrap();
        let truncated: String = text.lines().take(10).map(|l| format!("{l}\n")).collect();
        fs::write(&p, truncated).unwrap();
        assert!(matches!(read_table(&p, &f, 4, 2), Err(Error::Cache { .. })));
    }
}
