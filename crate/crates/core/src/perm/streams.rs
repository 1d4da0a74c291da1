//! Enumerators over subsets of `S_N` and over perfect matchings.
//!
//! All streams are deterministic. Streams over `S_N` are capped at
//! [`MAX_PERM_POINTS`] points and matchings at [`MAX_MATCHING_POINTS`].

use itertools::Itertools;

use super::permutation::Permutation;
use crate::error::{guard, Error, Result};

pub const MAX_PERM_POINTS: usize = 12;
pub const MAX_MATCHING_POINTS: usize = 20;

/// Every permutation of `{1..n}`, lexicographic in the image list.
pub fn all_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    guard("permutation stream points", n, MAX_PERM_POINTS)?;
    Ok((0..n).permutations(n).map(Permutation::from_zero_based))
}

/// Fixed-point-free permutations, in the same order as [`all_permutations`].
pub fn derangements(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    Ok(all_permutations(n)?.filter(Permutation::is_derangement))
}

/// Every single `k`-cycle on `{1..n}` (other points fixed).
///
/// Ordered by support (lexicographic `k`-subsets), then by the arrangement
/// of the cycle after its smallest element.
pub fn k_cycles(n: usize, k: usize) -> Result<impl Iterator<Item = Permutation>> {
    guard("permutation stream points", n, MAX_PERM_POINTS)?;
    if k < 2 || k > n {
        return Err(Error::Domain(format!("k-cycle length {k} outside 2..={n}")));
    }
    Ok((0..n).combinations(k).flat_map(move |support| {
        let head = support[0];
        support[1..]
            .to_vec()
            .into_iter()
            .permutations(k - 1)
            .map(move |tail| {
                let mut images: Vec<usize> = (0..n).collect();
                let mut prev = head;
                for &p in &tail {
                    images[prev] = p;
                    prev = p;
                }
                images[prev] = head;
                Permutation::from_zero_based(images)
            })
    }))
}

/// Non-identity permutations whose nontrivial cycles all have even length.
/// Fixed points are allowed.
pub fn even_cycle_perms(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    if n % 2 != 0 {
        return Err(Error::Domain(format!("even-cycle permutations need even N, got {n}")));
    }
    Ok(all_permutations(n)?.filter(|p| {
        let ty = p.cycle_type();
        !ty.is_empty() && ty.iter().all(|l| l % 2 == 0)
    }))
}

/// A partition of `{1..2n}` into unordered pairs. Each pair is `(i, j)`
/// with `i < j`; pairs are sorted by their first element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairPartition {
    pairs: Vec<(usize, usize)>,
}

impl PairPartition {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// The matching as an involution without fixed points.
    pub fn as_permutation(&self) -> Permutation {
        let n = self.pairs.len() * 2;
        let mut images: Vec<usize> = (0..n).collect();
        for &(a, b) in &self.pairs {
            images[a - 1] = b - 1;
            images[b - 1] = a - 1;
        }
        Permutation::from_zero_based(images)
    }

    /// Pairs are disjoint, ordered within themselves, and cover `{1..2n}`.
    pub fn is_valid(&self) -> bool {
        let n = self.pairs.len() * 2;
        let mut seen = vec![false; n + 1];
        for &(a, b) in &self.pairs {
            if a >= b || b > n || a == 0 || seen[a] || seen[b] {
                return false;
            }
            seen[a] = true;
            seen[b] = true;
        }
        seen[1..].iter().all(|&s| s)
    }
}

/// Mixed-radix odometer over matchings: digit `l` chooses the partner of the
/// smallest point still unpaired at level `l`, among `n - 2l - 1` candidates.
pub struct PairPartitions {
    points: usize,
    digits: Vec<usize>,
    done: bool,
}

impl PairPartitions {
    fn decode(&self) -> PairPartition {
        let mut free: Vec<usize> = (1..=self.points).collect();
        let mut pairs = Vec::with_capacity(self.digits.len());
        for &d in &self.digits {
            let anchor = free.remove(0);
            let partner = free.remove(d);
            pairs.push((anchor, partner));
        }
        PairPartition { pairs }
    }
}

impl Iterator for PairPartitions {
    type Item = PairPartition;

    fn next(&mut self) -> Option<PairPartition> {
        if self.done {
            return None;
        }
        let out = self.decode();
        let mut level = self.digits.len();
        loop {
            if level == 0 {
                self.done = true;
                break;
            }
            level -= 1;
            let radix = self.points - 2 * level - 1;
            self.digits[level] += 1;
            if self.digits[level] < radix {
                break;
            }
            self.digits[level] = 0;
        }
        Some(out)
    }
}

/// All `(n - 1)!!` partitions of `{1..n}` into pairs.
pub fn pair_partitions(n: usize) -> Result<PairPartitions> {
    guard("pair partition points", n, MAX_MATCHING_POINTS)?;
    if n % 2 != 0 {
        return Err(Error::Domain(format!("pair partitions need even N, got {n}")));
    }
    Ok(PairPartitions {
        points: n,
        digits: vec![0; n / 2],
        done: false,
    })
}
