//! Double factorials, Bernoulli numbers and tangent numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rat;
use crate::error::{guard, Error, Result};

pub const MAX_BERNOULLI_INDEX: usize = 60;
pub const MAX_TANGENT_INDEX: usize = 30;

/// `m!! = m (m-2) (m-4) ...`, with `0!! = 1`.
pub fn double_factorial(m: u64) -> BigInt {
    (1..=m)
        .rev()
        .step_by(2)
        .fold(BigInt::one(), |acc, k| acc * k)
}

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `B_0 ..= B_m` from `sum_{k=0}^{m} C(m+1, k) B_k = 0`, so `B_1 = -1/2`.
fn bernoulli_table(m: usize) -> Vec<Rat> {
    let mut table: Vec<Rat> = Vec::with_capacity(m + 1);
    table.push(Rat::one());
    for j in 1..=m {
        let s: Rat = table
            .iter()
            .enumerate()
            .map(|(k, b)| b * &Rat::from(binomial(j as u64 + 1, k as u64)))
            .sum();
        table.push(-s * Rat::new(1, j as i64 + 1).expect("nonzero"));
    }
    table
}

/// Exact `B_m` for even `m` in `2..=60`.
pub fn bernoulli(m: usize) -> Result<Rat> {
    if m == 0 || m % 2 != 0 {
        return Err(Error::Domain(format!("bernoulli index must be even and positive, got {m}")));
    }
    guard("bernoulli index", m, MAX_BERNOULLI_INDEX)?;
    Ok(bernoulli_table(m).pop().expect("table has m + 1 entries"))
}

/// `T_n` from `(-1)^n T_n = 2^{2n} (1 - 2^{2n}) B_{2n} / (2n)`.
fn tangent_from_bernoulli(n: usize, b2n: &Rat) -> Rat {
    let four_n = Rat::from(BigInt::one() << (2 * n));
    let v = &(&four_n * &(Rat::one() - &four_n)) * b2n;
    let v = v * Rat::new(1, 2 * n as i64).expect("nonzero");
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Tangent numbers by the in-place triangle recurrence, integers throughout.
fn tangent_by_triangle(max_n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); max_n + 1];
    if max_n == 0 {
        return Vec::new();
    }
    t[1] = BigInt::one();
    for k in 2..=max_n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=max_n {
        for j in k..=max_n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t.split_off(1)
}

/// `T_1 ..= T_{max_n}`, computed from Bernoulli numbers and from the
/// tangent triangle; the two must agree.
pub fn tangent_numbers(max_n: usize) -> Result<Vec<BigInt>> {
    guard("tangent index", max_n, MAX_TANGENT_INDEX)?;
    let bern = bernoulli_table(2 * max_n);
    let triangle = tangent_by_triangle(max_n);
    for (i, tri) in triangle.iter().enumerate() {
        let n = i + 1;
        let via_b = tangent_from_bernoulli(n, &bern[2 * n]);
        if via_b != Rat::from(tri.clone()) {
            return Err(Error::InternalInconsistency(format!(
                "T_{n}: bernoulli route gives {via_b}, triangle gives {tri}"
            )));
        }
    }
    Ok(triangle)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(0), BigInt::from(1));
        assert_eq!(double_factorial(1), BigInt::from(1));
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(8), BigInt::from(384));
        assert_eq!(double_factorial(9), BigInt::from(945));
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(2).unwrap(), q("1/6"));
        assert_eq!(bernoulli(4).unwrap(), q("-1/30"));
        assert_eq!(bernoulli(6).unwrap(), q("1/42"));
        assert_eq!(bernoulli(12).unwrap(), q("-691/2730"));
        assert_eq!(bernoulli_table(1)[1], q("-1/2"));
        assert!(bernoulli(3).is_err());
        assert!(bernoulli(0).is_err());
        assert!(matches!(bernoulli(62), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn tangent_values() {
        let t = tangent_numbers(5).unwrap();
        let want: Vec<BigInt> = [1, 2, 16, 272, 7936].into_iter().map(BigInt::from).collect();
        assert_eq!(t, want);
        assert!(matches!(tangent_numbers(31), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn tangent_from_b2_by_hand() {
        // (-1) T_1 = 4 * (-3) * (1/6) / 2 = -1
        assert_eq!(tangent_from_bernoulli(1, &q("1/6")), q("1"));
        assert_eq!(tangent_from_bernoulli(2, &q("-1/30")), q("2"));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(39, 19), "68923264410".parse::<BigInt>().unwrap());
        assert_eq!(binomial(3, 4), BigInt::zero());
    }
}
