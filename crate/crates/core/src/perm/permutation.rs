//! One-based permutations of `{1..N}` and their cycle structure.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{1..N}`. Stored zero-based; every public accessor is
/// one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Disjoint nontrivial cycles plus the sorted fixed points. Each cycle starts
/// at its smallest element; cycles are ordered by that element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
    pub fixed: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From one-based images, `images[j - 1] = tau(j)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Domain(format!("{images:?} is not a bijection on 1..{n}")));
            }
            seen[img - 1] = true;
            zero_based.push(img - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// Builds a permutation of `{1..n}` from one-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n || touched[p - 1] {
                    return Err(Error::Domain(format!("bad cycle {cycle:?} for n = {n}")));
                }
                touched[p - 1] = true;
                images[p - 1] = cycle[(idx + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity.
    pub fn parse_cycles(n: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected `(` in `{s}`")))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in `{s}`")))?;
            let cycle = body[..close]
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `tau(j)` for one-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `j -> self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Domain(format!(
                "cannot compose permutations of {} and {} points",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    /// `Fix(tau)`, one-based and sorted.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.apply(j) == j).collect()
    }

    /// `D(tau)`, the moved points, one-based and sorted.
    pub fn moved_points(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.apply(j) != j).collect()
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i != v)
    }

    pub fn cycle_decompose(&self) -> CycleDecomposition {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            if self.images[start] == start {
                seen[start] = true;
                fixed.push(start + 1);
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles, fixed }
    }

    /// Lengths of the nontrivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycle_decompose().cycles.iter().map(Vec::len).collect()
    }

    /// `+1` for even permutations, `-1` for odd.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycle_type().iter().map(|l| l - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl CycleDecomposition {
    pub fn recompose(&self) -> Permutation {
        let n = self.fixed.len() + self.cycles.iter().map(Vec::len).sum::<usize>();
        Permutation::from_cycles(n, &self.cycles).expect("decomposition covers 1..n")
    }

    pub fn moved(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return write!(f, "()");
        }
        for c in &self.cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One-based image list, e.g. `[2,1,4,3]`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected `[..]`, got `{s}`")))?;
        if body.trim().is_empty() {
            return Ok(Permutation::identity(0));
        }
        let images = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("`{t}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decompose_examples() {
        let id = Permutation::identity(4).cycle_decompose();
        assert!(id.cycles.is_empty());
        assert_eq!(id.fixed, vec![1, 2, 3, 4]);

        let p = Permutation::from_images(&[2, 1, 4, 3]).unwrap();
        let d = p.cycle_decompose();
        assert_eq!(d.cycles, vec![vec![1, 2], vec![3, 4]]);
        assert!(d.fixed.is_empty());
        assert_eq!(d.to_string(), "(1 2)(3 4)");

        let c = Permutation::from_images(&[2, 3, 4, 1]).unwrap().cycle_decompose();
        assert_eq!(c.cycles, vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn text_forms() {
        let p: Permutation = "[2,1,4,3]".parse().unwrap();
        assert_eq!(p.to_string(), "[2,1,4,3]");
        assert_eq!(Permutation::parse_cycles(4, "(1 2)(3 4)").unwrap(), p);
        assert_eq!(
            Permutation::parse_cycles(3, "(1 2 3)").unwrap().images(),
            vec![2, 3, 1]
        );
        assert!("[1,1]".parse::<Permutation>().is_err());
        assert!("[0,1]".parse::<Permutation>().is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
    }

    #[test]
    fn compose_and_inverse() {
        let s = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let t = Permutation::parse_cycles(3, "(2 3)").unwrap();
        // (1 2)(2 3): 3 -> 2 -> 1
        assert_eq!(s.compose(&t).unwrap().apply(3), 1);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(Permutation::parse_cycles(3, "(1 2 3)").unwrap().sign(), 1);
        assert_eq!(t.sign(), -1);
    }
}
