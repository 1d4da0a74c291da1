//! Permanents: a direct sum over `S_N` and Ryser's inclusion-exclusion
//! formula walked in Gray-code order.
//!
//! Ryser: `per(M) = (-1)^N sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} M[i][j]`.
//! Consecutive Gray codes differ in one column, so each step updates the
//! `N` running row sums with one addition or subtraction apiece.

use rayon::prelude::*;

use super::ring::Ring;
use super::square::SquareMatrix;
use crate::error::{guard, Result};

pub const MAX_NAIVE_DIM: usize = 10;
pub const MAX_RYSER_DIM: usize = 24;

/// `sum_tau prod_j M[j][tau(j)]` over all of `S_N`, grouped row by row as
/// `sum_c M[r][c] * (sum over completions)` so partial sums stay small.
pub fn permanent_naive<R: Ring>(m: &SquareMatrix<R>) -> Result<R> {
    guard("naive permanent dimension", m.dim(), MAX_NAIVE_DIM)?;
    let mut used = vec![false; m.dim()];
    Ok(expand(m, 0, &mut used))
}

fn expand<R: Ring>(m: &SquareMatrix<R>, row: usize, used: &mut [bool]) -> R {
    if row == m.dim() {
        return m.get(0, 0).one_like();
    }
    let mut total = m.get(0, 0).zero_like();
    for col in 0..m.dim() {
        if used[col] {
            continue;
        }
        used[col] = true;
        let rest = expand(m, row + 1, used);
        used[col] = false;
        total.add_assign_ref(&m.get(row, col).times(&rest));
    }
    total
}

#[inline]
fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

/// Signed Ryser partial sum over subset indices `start..end` (Gray-code
/// positions, `1 <= start < end <= 2^N`), without the global `(-1)^N`.
fn ryser_range<R: Ring>(m: &SquareMatrix<R>, start: u64, end: u64) -> R {
    let n = m.dim();
    let zero = m.get(0, 0).zero_like();
    let mut total = zero.clone();
    if start >= end {
        return total;
    }

    let first = gray(start);
    let mut row_sums: Vec<R> = (0..n)
        .map(|i| {
            let mut s = zero.clone();
            for j in (0..n).filter(|j| first >> j & 1 == 1) {
                s.add_assign_ref(m.get(i, j));
            }
            s
        })
        .collect();

    let accumulate = |code: u64, sums: &[R], total: &mut R| {
        if sums.iter().any(Ring::is_zero) {
            return;
        }
        let mut prod = sums[0].clone();
        for s in &sums[1..] {
            prod = prod.times(s);
        }
        if code.count_ones() % 2 == 1 {
            total.sub_assign_ref(&prod);
        } else {
            total.add_assign_ref(&prod);
        }
    };

    accumulate(first, &row_sums, &mut total);
    for k in start + 1..end {
        let col = k.trailing_zeros() as usize;
        let code = gray(k);
        let adding = code >> col & 1 == 1;
        for (i, s) in row_sums.iter_mut().enumerate() {
            if adding {
                s.add_assign_ref(m.get(i, col));
            } else {
                s.sub_assign_ref(m.get(i, col));
            }
        }
        accumulate(code, &row_sums, &mut total);
    }
    total
}

fn apply_global_sign<R: Ring>(n: usize, total: R) -> R {
    if n % 2 == 1 {
        total.negated()
    } else {
        total
    }
}

/// Ryser's formula, single-threaded.
pub fn permanent_ryser<R: Ring>(m: &SquareMatrix<R>) -> Result<R> {
    guard("ryser permanent dimension", m.dim(), MAX_RYSER_DIM)?;
    let n = m.dim();
    Ok(apply_global_sign(n, ryser_range(m, 1, 1u64 << n)))
}

/// Ryser's formula with the Gray-code sequence split into `parts`
/// contiguous ranges evaluated on the rayon pool. Each range initializes its
/// own row sums; partial sums are combined in range order, so the result is
/// identical for every `parts`.
pub fn permanent_ryser_parallel<R: Ring>(m: &SquareMatrix<R>, parts: usize) -> Result<R> {
    guard("ryser permanent dimension", m.dim(), MAX_RYSER_DIM)?;
    let n = m.dim();
    let end = 1u64 << n;
    let span = end - 1;
    let parts = (parts.max(1) as u64).min(span);
    let bounds: Vec<(u64, u64)> = (0..parts)
        .map(|p| (1 + span * p / parts, 1 + span * (p + 1) / parts))
        .collect();
    let partials: Vec<R> = bounds
        .par_iter()
        .map(|&(s, e)| ryser_range(m, s, e))
        .collect();
    let mut total = m.get(0, 0).zero_like();
    for p in &partials {
        total.add_assign_ref(p);
    }
    Ok(apply_global_sign(n, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rat;

    fn mat(s: &str) -> SquareMatrix<Rat> {
        s.parse().unwrap()
    }

    #[test]
    fn two_by_two_sign_matrix() {
        let m = mat("1,-1;1,1");
        assert!(permanent_naive(&m).unwrap().is_zero());
        assert!(permanent_ryser(&m).unwrap().is_zero());
    }

    #[test]
    fn all_ones_and_identity() {
        let ones = SquareMatrix::from_fn(5, |_, _| Rat::one());
        assert_eq!(permanent_ryser(&ones).unwrap(), Rat::from(120));
        let id = SquareMatrix::from_fn(4, |i, j| if i == j { Rat::one() } else { Rat::zero() });
        assert_eq!(permanent_naive(&id).unwrap(), Rat::one());
        assert_eq!(permanent_ryser(&id).unwrap(), Rat::one());
    }

    #[test]
    fn one_by_one() {
        let m = mat("7/2");
        assert_eq!(permanent_ryser(&m).unwrap(), Rat::new(7, 2).unwrap());
        assert_eq!(permanent_naive(&m).unwrap(), Rat::new(7, 2).unwrap());
    }

    #[test]
    fn parallel_split_is_independent_of_parts() {
        let m = SquareMatrix::from_fn(7, |i, j| Rat::new((i * 3 + j * j) as i64 - 9, (i + 2 * j + 1) as i64).unwrap());
        let want = permanent_ryser(&m).unwrap();
        for parts in [1, 2, 3, 5, 16, 127, 1000] {
            assert_eq!(permanent_ryser_parallel(&m, parts).unwrap(), want, "parts={parts}");
        }
    }

    #[test]
    fn guards() {
        let big = SquareMatrix::from_fn(11, |_, _| Rat::one());
        assert!(permanent_naive(&big).is_err());
        let huge = SquareMatrix::from_fn(25, |_, _| Rat::one());
        assert!(permanent_ryser(&huge).is_err());
    }
}
