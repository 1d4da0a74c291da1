//! Structured matrices built from points or from a root of unity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{CycloField, CycloNum, Rat};
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Pairwise distinct rational points `x_1, ..., x_N`. Zero is allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointVector {
    xs: Vec<Rat>,
}

impl PointVector {
    pub fn new(xs: Vec<Rat>) -> Result<Self> {
        if xs.is_empty() {
            return Err(Error::Domain("a point vector needs at least one point".into()));
        }
        let mut seen: HashMap<&Rat, usize> = HashMap::with_capacity(xs.len());
        for (i, x) in xs.iter().enumerate() {
            if let Some(&first) = seen.get(x) {
                return Err(Error::DuplicatePoints {
                    first: first + 1,
                    second: i + 1,
                });
            }
            seen.insert(x, i);
        }
        Ok(PointVector { xs })
    }

    pub fn from_i64(xs: &[i64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| Rat::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// One-based, matching `x_j`.
    pub fn x(&self, j: usize) -> &Rat {
        &self.xs[j - 1]
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.xs
    }

    pub fn scaled(&self, c: &Rat) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("scale factor must be nonzero".into()));
        }
        Ok(PointVector {
            xs: self.xs.iter().map(|x| x * c).collect(),
        })
    }

    /// Reorders so that entry `i` of the result is entry `perm[i]` (zero-based).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        PointVector {
            xs: perm.iter().map(|&i| self.xs[i].clone()).collect(),
        }
    }
}

impl FromStr for PointVector {
    type Err = Error;

    /// Comma-separated rationals, e.g. `1,2,-3/4`.
    fn from_str(s: &str) -> Result<Self> {
        let xs = s
            .split(',')
            .map(str::parse::<Rat>)
            .collect::<Result<Vec<_>>>()?;
        Self::new(xs)
    }
}

impl fmt::Display for PointVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.xs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `(x_j + x_k) / (x_j - x_k)` for distinct points.
pub(crate) fn cauchy_ratio(xj: &Rat, xk: &Rat) -> Rat {
    (xj + xk) / (xj - xk)
}

/// `X[j][k] = (x_j + x_k) / (x_j - x_k)` off the diagonal, `1` on it.
pub fn build_x(xs: &PointVector) -> SquareMatrix<Rat> {
    let p = xs.as_slice();
    SquareMatrix::from_fn(p.len(), |j, k| {
        if j == k {
            Rat::one()
        } else {
            cauchy_ratio(&p[j], &p[k])
        }
    })
}

/// `X - J`: off the diagonal `2 x_k / (x_j - x_k)`, zero on it.
pub fn build_x_minus_j(xs: &PointVector) -> SquareMatrix<Rat> {
    let p = xs.as_slice();
    let two = Rat::from(2);
    SquareMatrix::from_fn(p.len(), |j, k| {
        if j == k {
            Rat::zero()
        } else {
            &(&two * &p[k]) / &(&p[j] - &p[k])
        }
    })
}

/// The `2n x 2n` sign matrix: `+1` on and below the diagonal, `-1` above.
///
/// # Panics
///
/// If `n == 0`.
pub fn build_a(n: usize) -> SquareMatrix<Rat> {
    assert!(n >= 1, "build_a needs n >= 1");
    SquareMatrix::from_fn(2 * n, |i, j| {
        if i >= j {
            Rat::one()
        } else {
            Rat::from(-1)
        }
    })
}

/// `(2n+1) x (2n+1)` matrix over indices `0..=2n`: `(j + k) / (j - k)` off the
/// diagonal, `1` on it.
pub fn build_m(n: usize) -> SquareMatrix<Rat> {
    SquareMatrix::from_fn(2 * n + 1, |j, k| {
        if j == k {
            Rat::one()
        } else {
            Rat::new(j as i64 + k as i64, j as i64 - k as i64).expect("j != k")
        }
    })
}

/// `c_{j,k} = (1 + zeta^{j-k}) / (1 - zeta^{j-k})`, diagonal `1`, with
/// `zeta` the class of `x` in `Q(zeta_n)`.
pub fn build_c(n: usize, size: usize) -> Result<SquareMatrix<CycloNum>> {
    build_c_with_root(n, size, 1)
}

/// As [`build_c`] with `zeta` replaced by `zeta^root_exp`. A primitive root
/// needs `gcd(root_exp, n) = 1`.
pub fn build_c_with_root(n: usize, size: usize, root_exp: i64) -> Result<SquareMatrix<CycloNum>> {
    if n < 2 {
        return Err(Error::Domain(format!("build_c needs n > 1, got {n}")));
    }
    if size == 0 {
        return Err(Error::Domain("build_c needs a positive size".into()));
    }
    let field = CycloField::new(n)?;
    let one = field.one();
    // c depends only on (j - k) mod n
    let mut by_diff: Vec<Option<CycloNum>> = vec![None; n];
    for d in 1..n {
        let z = field.root_power(root_exp * d as i64);
        let den = &one - &z;
        by_diff[d] = match den.inv() {
            Ok(inv) => Some(&(&one + &z) * &inv),
            Err(_) => None,
        };
    }
    let mut entries = Vec::with_capacity(size * size);
    for j in 0..size {
        for k in 0..size {
            if j == k {
                entries.push(one.clone());
                continue;
            }
            let diff = j as i64 - k as i64;
            let idx = diff.rem_euclid(n as i64) as usize;
            match by_diff[idx].as_ref() {
                Some(c) => entries.push(c.clone()),
                None => {
                    return Err(Error::DegenerateDenominator { order: n, diff });
                }
            }
        }
    }
    SquareMatrix::new(size, entries)
}
