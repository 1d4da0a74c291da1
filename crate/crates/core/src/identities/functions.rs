//! The functions whose identities are checked: the weight `f(tau)`, the
//! permanent `S(x_1..x_2n)` by definition and by the matching formula, the
//! full-cycle sum `s`, and the sequence `r_n`.

use num_bigint::BigInt;

use crate::arith::Rat;
use crate::builders::{build_m, build_x, cauchy_ratio, PointVector};
use crate::error::{guard, Error, Result};
use crate::matrix::{permanent_naive, permanent_ryser};
use crate::perm::{binomial, k_cycles, pair_partitions, tangent_numbers, Permutation};

pub const MAX_CYCLE_SUM_POINTS: usize = 10;
pub const MAX_RN_INDEX: usize = 11;

/// `f(tau) = prod_{j in D(tau)} (x_j + x_tau(j)) / (x_j - x_tau(j))`.
pub fn f_weight(tau: &Permutation, xs: &PointVector) -> Result<Rat> {
    if tau.len() != xs.len() {
        return Err(Error::Domain(format!(
            "permutation on {} points with {} coordinates",
            tau.len(),
            xs.len()
        )));
    }
    let p = xs.as_slice();
    Ok(tau
        .zero_based()
        .iter()
        .enumerate()
        .filter(|(j, t)| j != *t)
        .map(|(j, &t)| cauchy_ratio(&p[j], &p[t]))
        .product())
}

fn require_even(xs: &PointVector) -> Result<()> {
    if xs.len() % 2 != 0 {
        Err(Error::Domain(format!("S needs an even number of points, got {}", xs.len())))
    } else {
        Ok(())
    }
}

/// `S = per(X)` via Ryser.
pub fn s_by_definition(xs: &PointVector) -> Result<Rat> {
    require_even(xs)?;
    permanent_ryser(&build_x(xs))
}

/// `S = per(X)` by direct expansion over `S_2n` (at most 10 points).
pub fn s_by_definition_naive(xs: &PointVector) -> Result<Rat> {
    require_even(xs)?;
    permanent_naive(&build_x(xs))
}

/// `(-4)^n x_1 ... x_2n sum_{matchings} prod_k 1 / (x_{i_k} - x_{j_k})^2`.
pub fn s_by_matching(xs: &PointVector) -> Result<Rat> {
    require_even(xs)?;
    let p = xs.as_slice();
    let n = p.len() / 2;
    let mut sum = Rat::zero();
    for m in pair_partitions(p.len())? {
        let den: Rat = m
            .pairs()
            .iter()
            .map(|&(a, b)| {
                let d = &p[a - 1] - &p[b - 1];
                &d * &d
            })
            .product();
        sum += &den.recip()?;
    }
    let coord_product: Rat = p.iter().cloned().product();
    let scale = Rat::from(BigInt::from(-4).pow(n as u32));
    Ok(scale * coord_product * sum)
}

/// `s = sum over full 2n-cycles of f(tau)`.
pub fn s_by_cycles(xs: &PointVector) -> Result<Rat> {
    require_even(xs)?;
    guard("full-cycle sum points", xs.len(), MAX_CYCLE_SUM_POINTS)?;
    let mut total = Rat::zero();
    for tau in k_cycles(xs.len(), xs.len())? {
        total += &f_weight(&tau, xs)?;
    }
    Ok(total)
}

/// `r_n = per[(j + k) / (j - k)]` over indices `0..=2n`.
pub fn rn(n: usize) -> Result<Rat> {
    if n == 0 {
        return Err(Error::Domain("r_n is defined for n >= 1".into()));
    }
    guard("r_n index", n, MAX_RN_INDEX)?;
    permanent_ryser(&build_m(n))
}

/// `s_1 = -1` and `s_k = (-1)^k T_k` for `k >= 2`; returns `s_1 ..= s_{n_max}`.
pub fn s_sequence(n_max: usize) -> Result<Vec<Rat>> {
    let t = tangent_numbers(n_max)?;
    Ok(t.into_iter()
        .enumerate()
        .map(|(i, tk)| {
            let k = i + 1;
            if k == 1 {
                Rat::from(-1)
            } else if k % 2 == 0 {
                Rat::from(tk)
            } else {
                -Rat::from(tk)
            }
        })
        .collect())
}

/// `1 + sum_{k=1}^{n} C(2n-1, 2k-1) s_k` and `sum_{k=2}^{n} C(2n-1, 2k-1) s_k`.
pub(crate) fn recurrence_sums(n: usize, s: &[Rat]) -> (Rat, Rat) {
    let term = |k: usize| Rat::from(binomial(2 * n as u64 - 1, 2 * k as u64 - 1)) * &s[k - 1];
    let tail: Rat = (2..=n).map(term).sum();
    let full = Rat::one() + term(1) + &tail;
    (full, tail)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    fn pts(v: &[i64]) -> PointVector {
        PointVector::from_i64(v).unwrap()
    }

    fn q(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn f_weight_examples() {
        let xs = pts(&[1, 2, 4]);
        assert!(f_weight(&Permutation::identity(3), &xs).unwrap().is_one());
        let swap = Permutation::parse_cycles(2, "(1 2)").unwrap();
        assert_eq!(f_weight(&swap, &pts(&[1, 2])).unwrap(), q("-9"));
        let c = Permutation::parse_cycles(3, "(1 2 3)").unwrap();
        let ci = Permutation::parse_cycles(3, "(1 3 2)").unwrap();
        assert_eq!(
            f_weight(&ci, &xs).unwrap(),
            -f_weight(&c, &xs).unwrap()
        );
        assert!(f_weight(&c, &pts(&[1, 2])).is_err());
    }

    #[test]
    fn s_examples() {
        assert_eq!(s_by_definition(&pts(&[1, 2])).unwrap(), q("-8"));
        assert_eq!(s_by_matching(&pts(&[1, 2])).unwrap(), q("-8"));
        assert!(s_by_definition(&pts(&[0, 7])).unwrap().is_zero());
        assert_eq!(s_by_definition(&pts(&[1, 2, 3, 4])).unwrap(), q("1352/3"));
        assert_eq!(s_by_definition_naive(&pts(&[1, 2, 3, 4])).unwrap(), q("1352/3"));
        assert_eq!(s_by_matching(&pts(&[1, 2, 3, 4])).unwrap(), q("1352/3"));
        assert!(s_by_matching(&pts(&[0, 5, 7, 11])).unwrap().is_zero());
        assert!(s_by_definition(&pts(&[1, 2, 3])).is_err());
    }

    #[test]
    fn s_definition_by_explicit_sum_over_sym_group() {
        // Oracle: sum f over all of S_4 directly.
        let xs = pts(&[1, 2, 3, 4]);
        let direct: Rat = all_permutations(4)
            .unwrap()
            .map(|t| f_weight(&t, &xs).unwrap())
            .sum();
        assert_eq!(direct, q("1352/3"));
    }

    #[test]
    fn cycle_sums() {
        assert_eq!(s_by_cycles(&pts(&[1, 2])).unwrap(), q("-9"));
        assert_eq!(s_by_cycles(&pts(&[1, 2, 3, 4])).unwrap(), q("2"));
        assert_eq!(s_by_cycles(&pts(&[1, 2, 3, 5, 8, 13])).unwrap(), q("-16"));
        assert!(matches!(
            s_by_cycles(&pts(&(1..=12).collect::<Vec<_>>())),
            Err(Error::SizeGuard { .. })
        ));
    }

    #[test]
    fn rn_first_terms() {
        assert_eq!(rn(1).unwrap(), q("-10"));
        assert_eq!(rn(2).unwrap(), q("5870/9"));
        assert_eq!(rn(3).unwrap(), q("-436619903/4050"));
        assert!(rn(0).is_err());
        assert!(matches!(rn(12), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn recurrence_small_n() {
        let s = s_sequence(3).unwrap();
        assert_eq!(s, vec![q("-1"), q("2"), q("-16")]);
        assert_eq!(recurrence_sums(1, &s).0, Rat::zero());
        assert_eq!(recurrence_sums(2, &s).0, Rat::zero());
        assert_eq!(recurrence_sums(3, &s).1, q("4"));
    }
}
