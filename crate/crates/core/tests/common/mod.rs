//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use permident::builders::PointVector;
use permident::{CycloField, CycloNum, Permutation, Rat, SquareMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

pub fn rng(seed: u64) -> SplitMix64 {
    SplitMix64::seed_from_u64(seed)
}

pub fn q(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn small_rat(rng: &mut impl Rng) -> Rat {
    Rat::new(rng.gen_range(-20i64..=20), rng.gen_range(1i64..=6)).unwrap()
}

pub fn nonzero_rat(rng: &mut impl Rng) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rat_matrix(rng: &mut impl Rng, dim: usize) -> SquareMatrix<Rat> {
    SquareMatrix::from_fn(dim, |_, _| small_rat(rng))
}

pub fn cyclo_elem(rng: &mut impl Rng, field: &Arc<CycloField>) -> CycloNum {
    let coeffs: Vec<Rat> = (0..field.phi())
        .map(|_| Rat::new(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)).unwrap())
        .collect();
    field.from_poly(&coeffs)
}

pub fn cyclo_matrix(rng: &mut impl Rng, field: &Arc<CycloField>, dim: usize) -> SquareMatrix<CycloNum> {
    SquareMatrix::from_fn(dim, |_, _| cyclo_elem(rng, field))
}

/// `count` distinct nonzero rationals.
pub fn distinct_points(rng: &mut impl Rng, count: usize) -> PointVector {
    let mut xs: Vec<Rat> = Vec::new();
    while xs.len() < count {
        let x = nonzero_rat(rng);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    PointVector::new(xs).unwrap()
}

pub fn random_perm(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

/// A random permutation of `1..=n` that moves only points of `support`.
pub fn random_perm_on(rng: &mut impl Rng, n: usize, support: &[usize]) -> Permutation {
    let mut shuffled = support.to_vec();
    shuffled.shuffle(rng);
    let mut images: Vec<usize> = (1..=n).collect();
    for (from, to) in support.iter().zip(&shuffled) {
        images[from - 1] = *to;
    }
    Permutation::from_images(&images).unwrap()
}

pub fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn double_factorial(m: u64) -> BigInt {
    (1..=m).rev().step_by(2).fold(BigInt::one(), |acc, k| acc * k)
}

/// `T_1 .. T_n` read off the power series `tan x = sin x / cos x`, computed by
/// exact series division.
pub fn tangent_by_series(n: usize) -> Vec<BigInt> {
    let len = 2 * n;
    let coeff = |k: usize, odd: bool| -> Rat {
        if (k % 2 == 1) != odd {
            return Rat::zero();
        }
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        Rat::from(sign as i64) / Rat::from(factorial(k as u64))
    };
    let sin: Vec<Rat> = (0..len).map(|k| coeff(k, true)).collect();
    let cos: Vec<Rat> = (0..len).map(|k| coeff(k, false)).collect();
    // tan * cos = sin, cos[0] = 1
    let mut tan: Vec<Rat> = Vec::with_capacity(len);
    for k in 0..len {
        let mut t = sin[k].clone();
        for j in 0..k {
            t -= &(&tan[j] * &cos[k - j]);
        }
        tan.push(t);
    }
    (1..=n)
        .map(|k| {
            let c = &tan[2 * k - 1] * &Rat::from(factorial(2 * k as u64 - 1));
            assert!(c.is_integer());
            c.numer().clone()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &SquareMatrix<Rat>) -> Rat {
    let n = m.dim();
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut total = Rat::zero();
    for c in 0..n {
        let minor = SquareMatrix::from_fn(n - 1, |i, j| {
            m.get(i + 1, if j < c { j } else { j + 1 }).clone()
        });
        let term = m.get(0, c) * &det_cofactor(&minor);
        if c % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// `f(tau)` straight from the definition, on a plain slice.
pub fn f_direct(tau: &Permutation, xs: &[Rat]) -> Rat {
    let mut acc = Rat::one();
    for j in 1..=tau.len() {
        let t = tau.apply(j);
        if t != j {
            acc *= &((&xs[j - 1] + &xs[t - 1]) / (&xs[j - 1] - &xs[t - 1]));
        }
    }
    acc
}
