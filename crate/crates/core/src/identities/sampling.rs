//! Deterministic sampling of rational point vectors.
//!
//! Every trial draws from its own SplitMix64 stream (state step
//! `0x9E3779B97F4A7C15`, output mix multipliers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`, shifts 30/27/31), seeded from the user seed, the
//! identity, the size and the trial index. Trials are therefore independent
//! of scheduling and reproducible on every platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::arith::Rat;
use crate::builders::PointVector;

const NUMERATOR_BOUND: i64 = 99;
const DENOMINATOR_BOUND: i64 = 9;

pub fn trial_rng(seed: u64, stream: u64, n: usize, trial: usize) -> SplitMix64 {
    // Mix the coordinates through one SplitMix64 draw each.
    let mut key = SplitMix64::seed_from_u64(seed);
    let a: u64 = key.gen::<u64>() ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut key = SplitMix64::seed_from_u64(a);
    let b: u64 = key.gen::<u64>() ^ (n as u64).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    let mut key = SplitMix64::seed_from_u64(b);
    let c: u64 = key.gen::<u64>() ^ (trial as u64).wrapping_mul(0x94D0_49BB_1331_11EB);
    SplitMix64::seed_from_u64(c)
}

/// Numerator uniform in `[-99, 99] \ {0}`, denominator uniform in `[1, 9]`.
pub fn sample_nonzero_rat(rng: &mut impl Rng) -> Rat {
    let mut num = rng.gen_range(-NUMERATOR_BOUND..NUMERATOR_BOUND);
    if num >= 0 {
        num += 1;
    }
    let den = rng.gen_range(1..=DENOMINATOR_BOUND);
    Rat::new(num, den).expect("positive denominator")
}

/// `count` distinct nonzero rationals, resampling on collisions. If
/// `zero_at` is given, that coordinate is set to zero instead.
pub fn sample_points(rng: &mut impl Rng, count: usize, zero_at: Option<usize>) -> PointVector {
    let mut xs: Vec<Rat> = Vec::with_capacity(count);
    for i in 0..count {
        if zero_at == Some(i) {
            xs.push(Rat::zero());
            continue;
        }
        loop {
            let x = sample_nonzero_rat(rng);
            if !xs.contains(&x) {
                xs.push(x);
                break;
            }
        }
    }
    PointVector::new(xs).expect("sampled points are distinct and nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a = sample_points(&mut trial_rng(42, 1, 2, 0), 4, None);
        let b = sample_points(&mut trial_rng(42, 1, 2, 0), 4, None);
        let c = sample_points(&mut trial_rng(42, 1, 2, 1), 4, None);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn sample_ranges() {
        let mut rng = trial_rng(0, 0, 0, 0);
        for _ in 0..2000 {
            let r = sample_nonzero_rat(&mut rng);
            assert!(!r.is_zero());
            assert!(r.abs() <= Rat::from(99));
            assert!(r.abs() >= Rat::new(1, 9).unwrap());
        }
    }

    #[test]
    fn planted_zero() {
        let p = sample_points(&mut trial_rng(3, 2, 2, 0), 6, Some(4));
        assert!(p.x(5).is_zero());
        assert_eq!(p.as_slice().iter().filter(|x| x.is_zero()).count(), 1);
    }
}
