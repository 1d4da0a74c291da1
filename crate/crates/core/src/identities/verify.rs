//! One verifier per identity. Each returns exact [`VerdictRecord`]s ordered
//! by `(identity, n, trial, case)`; trials run on the current rayon pool.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

use super::functions::{
    f_weight, recurrence_sums, s_by_cycles, s_by_definition, s_by_definition_naive,
    s_by_matching, s_sequence,
};
use super::sampling::{sample_points, trial_rng};
use super::verdict::{IdentityId, VerdictRecord};
use crate::arith::{CycloField, CycloNum, Rat};
use crate::builders::{build_a, build_c, build_c_with_root, build_x, build_x_minus_j, PointVector};
use crate::error::{guard, Error, Result};
use crate::matrix::{determinant, permanent_ryser};
use crate::perm::{derangements, double_factorial, even_cycle_perms, k_cycles, tangent_numbers};

/// Trial count, base seed, and whether guarded sizes are unlocked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialPlan {
    pub trials: usize,
    pub seed: u64,
    pub force: bool,
}

impl TrialPlan {
    pub fn new(trials: usize, seed: u64) -> Self {
        TrialPlan {
            trials,
            seed,
            force: false,
        }
    }

    pub fn forced(self) -> Self {
        TrialPlan { force: true, ..self }
    }

    fn check(&self) -> Result<()> {
        if self.trials == 0 {
            Err(Error::Domain("at least one trial is required".into()))
        } else {
            Ok(())
        }
    }
}

fn range_check(what: &'static str, value: usize, lo: usize, hi: usize) -> Result<()> {
    if value < lo {
        return Err(Error::Domain(format!("{what} must be at least {lo}, got {value}")));
    }
    guard(what, value, hi)
}

fn run_trials(
    plan: &TrialPlan,
    f: impl Fn(usize) -> Result<Vec<VerdictRecord>> + Sync + Send,
) -> Result<Vec<VerdictRecord>> {
    plan.check()?;
    let per_trial: Vec<Vec<VerdictRecord>> = (0..plan.trials)
        .into_par_iter()
        .map(f)
        .collect::<Result<_>>()?;
    Ok(per_trial.into_iter().flatten().collect())
}

fn points_for(id: IdentityId, plan: &TrialPlan, n: usize, trial: usize, count: usize) -> PointVector {
    let mut rng = trial_rng(plan.seed, id.stream_tag(), n, trial);
    sample_points(&mut rng, count, None)
}

/// Matching formula against the permanent, on `2n` random points per trial.
/// Up to eight points the direct `S_2n` expansion is compared as well.
pub fn verify_theorem1(n: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    range_check("theorem1 n", n, 1, 8)?;
    let id = IdentityId::Theorem1;
    run_trials(plan, |trial| {
        let xs = points_for(id, plan, n, trial, 2 * n);
        let started = Instant::now();
        let by_matching = s_by_matching(&xs)?;
        let by_ryser = s_by_definition(&xs)?;
        let mut out = vec![VerdictRecord::compare(
            id, n, Some(plan.seed), trial, &by_ryser, &by_matching, started,
        )
        .with_case("ryser")];
        if 2 * n <= 8 {
            let started = Instant::now();
            let by_naive = s_by_definition_naive(&xs)?;
            out.push(
                VerdictRecord::compare(id, n, Some(plan.seed), trial, &by_naive, &by_matching, started)
                    .with_case("naive"),
            );
        }
        Ok(out)
    })
}

/// `S = 0` whenever one coordinate is zero.
pub fn verify_vanishing(n: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    range_check("vanishing n", n, 1, 8)?;
    let id = IdentityId::Vanishing;
    run_trials(plan, |trial| {
        let mut rng = trial_rng(plan.seed, id.stream_tag(), n, trial);
        let zero_at = rand::Rng::gen_range(&mut rng, 0..2 * n);
        let xs = sample_points(&mut rng, 2 * n, Some(zero_at));
        let started = Instant::now();
        let s = s_by_definition(&xs)?;
        Ok(vec![VerdictRecord::compare(
            id, n, Some(plan.seed), trial, &s, &Rat::zero(), started,
        )])
    })
}

/// The full-cycle sum equals `(-1)^n T_n` at every sample (which also
/// exhibits its independence of the points). `n <= 4`, or `5` when forced.
pub fn verify_theorem2(n: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    let hi = if plan.force { 5 } else { 4 };
    range_check("theorem2 n", n, 2, hi)?;
    let id = IdentityId::Theorem2;
    let t = tangent_numbers(n)?.pop().expect("n >= 2");
    let expected = if n % 2 == 0 { Rat::from(t) } else { -Rat::from(t) };
    run_trials(plan, |trial| {
        let xs = points_for(id, plan, n, trial, 2 * n);
        let started = Instant::now();
        let s = s_by_cycles(&xs)?;
        Ok(vec![VerdictRecord::compare(
            id, n, Some(plan.seed), trial, &s, &expected, started,
        )])
    })
}

/// `1 + sum_{k=1}^n C(2n-1,2k-1) s_k = 0` for every `n <= n_max`, and
/// `sum_{k=2}^n C(2n-1,2k-1) s_k = 2n - 2` for `2 <= n <= n_max`.
pub fn verify_recurrence(n_max: usize) -> Result<Vec<VerdictRecord>> {
    range_check("recurrence n_max", n_max, 1, 20)?;
    let s = s_sequence(n_max)?;
    let mut out = Vec::new();
    for n in 1..=n_max {
        let started = Instant::now();
        let (full, tail) = recurrence_sums(n, &s);
        out.push(
            VerdictRecord::compare(IdentityId::Recurrence, n, None, 0, &full, &Rat::zero(), started)
                .with_case("full"),
        );
        if n >= 2 {
            out.push(
                VerdictRecord::compare(
                    IdentityId::Recurrence,
                    n,
                    None,
                    0,
                    &tail,
                    &Rat::from(2 * n as i64 - 2),
                    started,
                )
                .with_case("from_k2"),
            );
        }
    }
    Ok(out)
}

/// `per(A_n) = 0` for `n = 1..=n_max`.
pub fn verify_per_a(n_max: usize) -> Result<Vec<VerdictRecord>> {
    range_check("perA n_max", n_max, 1, 8)?;
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let started = Instant::now();
            let p = permanent_ryser(&build_a(n))?;
            Ok(VerdictRecord::compare(IdentityId::PerA, n, None, 0, &p, &Rat::zero(), started))
        })
        .collect()
}

/// `per(X - J) = (-1)^n det(X - J) = S`.
pub fn verify_theorem3_per_det(n: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    range_check("theorem3 n", n, 1, 8)?;
    let id = IdentityId::Theorem3PerDet;
    run_trials(plan, |trial| {
        let xs = points_for(id, plan, n, trial, 2 * n);
        let started = Instant::now();
        let xj = build_x_minus_j(&xs);
        let per = permanent_ryser(&xj)?;
        let det = determinant(&xj)?;
        let signed_det = if n % 2 == 0 { det } else { -det };
        let s = s_by_definition(&xs)?;
        Ok(vec![
            VerdictRecord::compare(id, n, Some(plan.seed), trial, &per, &signed_det, started)
                .with_case("per_vs_det"),
            VerdictRecord::compare(id, n, Some(plan.seed), trial, &signed_det, &s, started)
                .with_case("det_vs_s"),
        ])
    })
}

/// `per(X) = 1 + sum over even-cycle permutations of f(tau)`. `n <= 3`, or
/// `4` when forced.
pub fn verify_even_cycle_expansion(n: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    let hi = if plan.force { 4 } else { 3 };
    range_check("even-cycle n", n, 1, hi)?;
    let id = IdentityId::EvenCycleExpansion;
    run_trials(plan, |trial| {
        let xs = points_for(id, plan, n, trial, 2 * n);
        let started = Instant::now();
        let per = permanent_ryser(&build_x(&xs))?;
        let mut expansion = Rat::one();
        for tau in even_cycle_perms(2 * n)? {
            expansion += &f_weight(&tau, &xs)?;
        }
        Ok(vec![VerdictRecord::compare(
            id, n, Some(plan.seed), trial, &per, &expansion, started,
        )])
    })
}

fn cyclo_text(v: &CycloNum) -> String {
    match v.as_rational() {
        Some(r) => r.to_string(),
        None => v.to_string(),
    }
}

/// Permanent of `[c_{j,k}]` of the given size, with `zeta^root_exp` as the root.
pub fn cyclotomic_permanent(n: usize, size: usize, root_exp: i64) -> Result<CycloNum> {
    permanent_ryser(&build_c_with_root(n, size, root_exp)?)
}

/// Expected value: `((n-1)!!)^2` for even `n`, `((n-1)!!)^2 / n` for odd `n`.
pub fn cyclotomic_expected(n: usize) -> Rat {
    let df = Rat::from(double_factorial(n as u64 - 1));
    let sq = &df * &df;
    if n % 2 == 0 {
        sq
    } else {
        sq * Rat::new(1, n as i64).expect("n > 0")
    }
}

/// Cyclotomic permanent check with an arbitrary primitive root `zeta^root_exp`.
pub fn verify_cyclotomic_with_root(n: usize, root_exp: i64) -> Result<VerdictRecord> {
    let (id, size) = if n % 2 == 0 {
        range_check("cyclo-even n", n, 2, 12)?;
        (IdentityId::CycloEven, n)
    } else {
        range_check("cyclo-odd n", n, 3, 13)?;
        (IdentityId::CycloOdd, n - 1)
    };
    if (root_exp.rem_euclid(n as i64) as usize).gcd(&n) != 1 {
        return Err(Error::Domain(format!("zeta^{root_exp} is not primitive of order {n}")));
    }
    let started = Instant::now();
    let per = cyclotomic_permanent(n, size, root_exp)?;
    Ok(VerdictRecord::compare(
        id,
        n,
        None,
        0,
        &cyclo_text(&per),
        &cyclotomic_expected(n),
        started,
    ))
}

/// `per[c_{j,k}]_{1..n} = ((n-1)!!)^2` for even `n` in `2..=12`.
pub fn verify_cyclotomic_even(n: usize) -> Result<VerdictRecord> {
    if n % 2 != 0 {
        return Err(Error::Domain(format!("cyclo-even needs even n, got {n}")));
    }
    verify_cyclotomic_with_root(n, 1)
}

/// `per[c_{j,k}]_{1..n-1} = ((n-1)!!)^2 / n` for odd `n` in `3..=13`.
pub fn verify_cyclotomic_odd(n: usize) -> Result<VerdictRecord> {
    if n % 2 == 0 {
        return Err(Error::Domain(format!("cyclo-odd needs odd n, got {n}")));
    }
    verify_cyclotomic_with_root(n, 1)
}

/// `sum over full N-cycles of prod_j 1 / (x_tau(j) - x_j) = 0`.
pub fn verify_cycle_lemma(points: usize, plan: &TrialPlan) -> Result<Vec<VerdictRecord>> {
    range_check("cycle-lemma N", points, 3, 7)?;
    let id = IdentityId::CycleLemma;
    run_trials(plan, |trial| {
        let xs = points_for(id, plan, points, trial, points);
        let p = xs.as_slice();
        let started = Instant::now();
        let mut total = Rat::zero();
        for tau in k_cycles(points, points)? {
            let den: Rat = (1..=points)
                .map(|j| &p[tau.apply(j) - 1] - &p[j - 1])
                .product();
            total += &den.recip()?;
        }
        Ok(vec![VerdictRecord::compare(
            id, points, Some(plan.seed), trial, &total, &Rat::zero(), started,
        )])
    })
}

/// `sum_{tau} prod_{j=1}^{m} 1 / (1 - zeta^{j - tau(j)})` over derangements
/// of `m` points in `Q(zeta_n)`.
pub fn derangement_sum(n: usize, m: usize) -> Result<CycloNum> {
    let field = CycloField::new(n)?;
    let one = field.one();
    let inv: Vec<Option<CycloNum>> = (0..n)
        .map(|d| (&one - &field.root_power(d as i64)).inv().ok())
        .collect();
    let mut total = field.zero();
    for tau in derangements(m)? {
        let mut prod = one.clone();
        for j in 1..=m {
            let d = (j as i64 - tau.apply(j) as i64).rem_euclid(n as i64) as usize;
            let factor = inv[d].as_ref().ok_or(Error::DegenerateDenominator {
                order: n,
                diff: j as i64 - tau.apply(j) as i64,
            })?;
            prod = &prod * factor;
        }
        total = &total + &prod;
    }
    Ok(total)
}

/// Even `n`: the sum over derangements of `n` equals `((n-1)!!)^2 / 2^n`.
/// Odd `n`: the sum over derangements of `n - 1`, with the product over
/// `j = 1..n-1`, equals `(((n-1)/2)!)^2 / n`.
pub fn verify_derangement_sums(n: usize) -> Result<VerdictRecord> {
    range_check("derangement n", n, 2, 8)?;
    let started = Instant::now();
    let (m, expected) = if n % 2 == 0 {
        let df = Rat::from(double_factorial(n as u64 - 1));
        let two_n = Rat::from(BigInt::one() << n);
        (n, (&df * &df) / two_n)
    } else {
        let f = Rat::from(crate::perm::factorial((n as u64 - 1) / 2));
        (n - 1, (&f * &f) * Rat::new(1, n as i64).expect("n > 0"))
    };
    let sum = derangement_sum(n, m)?;
    Ok(VerdictRecord::compare(
        IdentityId::DerangementSums,
        n,
        None,
        0,
        &cyclo_text(&sum),
        &expected,
        started,
    ))
}

/// `prod_{s=1}^{n-1} (n + 1 - 2s)`.
pub fn wang_sun_product(n: usize) -> Rat {
    (1..n)
        .map(|s| Rat::from(n as i64 + 1 - 2 * s as i64))
        .product()
}

/// `det[c]_{1..n} = prod_{s=1}^{n-1}(n+1-2s)`; for even `n` also the closed
/// form `(-1)^{n/2-1} ((n-1)!!)^2 / (n-1)`; for odd `n` also
/// `det[c]_{1..n-1} = (-1)^{(n+1)/2} ((n-1)!!)^2 / (n(n-1))`.
pub fn verify_wang_sun_det(n: usize) -> Result<Vec<VerdictRecord>> {
    range_check("wang-sun n", n, 2, 12)?;
    let id = IdentityId::WangSunDet;
    let df = Rat::from(double_factorial(n as u64 - 1));
    let df_sq = &df * &df;

    let started = Instant::now();
    let det_full = determinant(&build_c(n, n)?)?;
    let product = wang_sun_product(n);
    let mut out = vec![
        VerdictRecord::compare(id, n, None, 0, &cyclo_text(&det_full), &product, started)
            .with_case("full"),
    ];

    if n % 2 == 0 {
        let sign = if (n / 2 - 1) % 2 == 0 { Rat::one() } else { Rat::from(-1) };
        let closed = sign * &df_sq * Rat::new(1, n as i64 - 1).expect("n > 1");
        out.push(
            VerdictRecord::compare(id, n, None, 0, &product, &closed, started)
                .with_case("full_closed_form"),
        );
    } else {
        let started = Instant::now();
        let det_minor = determinant(&build_c(n, n - 1)?)?;
        let sign = if ((n + 1) / 2) % 2 == 0 { Rat::one() } else { Rat::from(-1) };
        let expected = sign * &df_sq * Rat::new(1, (n * (n - 1)) as i64).expect("n > 1");
        out.push(
            VerdictRecord::compare(id, n, None, 0, &cyclo_text(&det_minor), &expected, started)
                .with_case("minor"),
        );
    }
    Ok(out)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `sum_{tau in S_{p-1}} prod_{tau(j) != j} (j + tau(j)) / (j - tau(j))`,
/// i.e. `per[x_{j,k}]` at the points `1..p-1`.
pub fn sun_sum(p: u64) -> Result<Rat> {
    let pts: Vec<i64> = (1..p as i64).collect();
    permanent_ryser(&build_x(&PointVector::from_i64(&pts)?))
}

/// `num * den^{-1} mod modulus`, with the result in `0..modulus`.
pub fn rational_residue(r: &Rat, modulus: &BigInt) -> Result<BigInt> {
    let g = r.denom().extended_gcd(modulus);
    if !g.gcd.is_one() {
        return Err(Error::Domain(format!(
            "denominator of {r} is not invertible modulo {modulus}"
        )));
    }
    Ok((r.numer() * g.x).mod_floor(modulus))
}

/// The sum above is congruent to `((p-2)!!)^2` modulo `p^2`. Only odd
/// primes `3..=11` are accepted.
pub fn verify_sun_congruence(p: u64) -> Result<VerdictRecord> {
    range_check("sun-congruence p", p as usize, 3, 11)?;
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    let started = Instant::now();
    let modulus = BigInt::from(p * p);
    let sum = sun_sum(p)?;
    let lhs = rational_residue(&sum, &modulus)?;
    let df = double_factorial(p - 2);
    let rhs = (&df * &df).mod_floor(&modulus);
    Ok(VerdictRecord::compare(
        IdentityId::SunCongruence,
        p as usize,
        None,
        0,
        &lhs,
        &rhs,
        started,
    ))
}
