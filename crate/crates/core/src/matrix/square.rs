use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::ring::Ring;
use crate::arith::{CycloField, CycloNum, Rat};
use crate::error::{Error, Result};

/// Dense `N x N` matrix, row-major, `N >= 1`. Indices are zero-based.
#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<R> {
    dim: usize,
    entries: Vec<R>,
}

impl<R: Ring> SquareMatrix<R> {
    pub fn new(dim: usize, entries: Vec<R>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("matrix dimension must be positive".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Domain(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        Ok(SquareMatrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Domain("rows must all have length N".into()));
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    /// # Panics
    ///
    /// If `dim == 0`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        SquareMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &R {
        &self.entries[row * self.dim + col]
    }

    pub fn row(&self, row: usize) -> &[R] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// Row `i` of the result is row `perm[i]` of `self` (zero-based).
    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(perm[i], j).clone())
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(i, perm[j]).clone())
    }

    /// Replaces one row, leaving the rest untouched.
    pub fn with_row(&self, row: usize, values: &[R]) -> Self {
        Self::from_fn(self.dim, |i, j| {
            if i == row {
                values[j].clone()
            } else {
                self.get(i, j).clone()
            }
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SquareMatrix<S> {
        SquareMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// Debug text: rows joined by `;`, entries by `,`.
impl<R: fmt::Display> fmt::Display for SquareMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, chunk) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, e) in chunk.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SquareMatrix<Rat> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| row.split(',').map(str::parse::<Rat>).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

impl SquareMatrix<CycloNum> {
    /// Parses cyclotomic entries written as `(a0,a1,...)` tuples.
    pub fn parse_in(field: &Arc<CycloField>, s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                split_tuples(row)?
                    .into_iter()
                    .map(|t| CycloNum::parse_in(field, t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

/// Splits `(a,b),(c,d)` on the commas that sit outside parentheses.
fn split_tuples(row: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in row.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced `)` in `{row}`")))?
            }
            ',' if depth == 0 => {
                out.push(row[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `(` in `{row}`")));
    }
    out.push(row[start..].trim());
    Ok(out)
}
