//! Closed-form probabilities, bounds, and the brute-force enumeration oracle.
//!
//! Everything a simulation is checked against lives here. Closed forms are
//! exact `BigRational`s wherever the inputs allow; only the constants ln 2,
//! e and π go through f64 (about 15.9 significant digits).

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use std::f64::consts::{E, FRAC_PI_4, LN_2, SQRT_2};

use crate::perm::{Permutation, Placement};
use crate::quantum::plan_exact_grover;
use crate::strategy::{pointer_player, shuffled_pointer_player, Fallback, StrategyKind};
use crate::oracle::QuerySession;
use crate::rng::rng_from_seed;
use crate::{Error, Result};

/// Enumeration cutoff: 8! = 40320 placements stays well under a second.
pub const ENUMERATION_LIMIT: usize = 8;

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational within f64 range")
}

/// Exact failure probability of the pointer-following team:
/// `Σ_{k=1}^{n/2} 1/(n/2 + k)`, the chance of a cycle longer than `n/2`.
pub fn pointer_failure_exact(n: usize) -> Result<BigRational> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::InvalidN { n, reason: "need even n >= 2" });
    }
    let half = (n / 2) as i64;
    let mut sum = BigRational::zero();
    for k in 1..=half {
        sum += ratio(1, half + k);
    }
    Ok(sum)
}

/// Same sum in f64, accumulated from the smallest term up, for sizes where
/// exact rationals are impractical (the reduced denominator at n = 10^6
/// would have on the order of 10^5.. digits).
pub fn pointer_failure_f64(n: u64) -> f64 {
    assert!(n >= 2 && n % 2 == 0, "need even n >= 2");
    let half = n / 2;
    let mut sum = 0.0;
    for k in (1..=half).rev() {
        sum += 1.0 / (half + k) as f64;
    }
    sum
}

/// The limiting team success probability `1 − ln 2 ≈ 0.30685`.
pub fn pointer_success_limit() -> f64 {
    let v = 1.0 - LN_2;
    assert!((v - 0.30685).abs() < 5e-6, "limit drifted: {v}");
    v
}

/// Upper bound for classical players under a `⌊√n⌋` budget: `1/⌊√n⌋!`.
pub fn sqrt_budget_bound(n: usize) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::InvalidN { n, reason: "need n >= 1" });
    }
    let root = isqrt(n);
    let mut fact = BigInt::one();
    for i in 2..=root {
        fact *= BigInt::from(i);
    }
    Ok(BigRational::new(BigInt::one(), fact))
}

/// Exact win probability of the sequential weak-oracle game:
/// `t^t · t! / (2t)!`, equal to the product `Π_{j=0}^{t−1} t/(2t−j)`.
pub fn weak_sequential_exact(t: usize) -> Result<BigRational> {
    if t < 1 {
        return Err(Error::InvalidN { n: t, reason: "need t >= 1" });
    }
    let mut num = BigInt::one();
    for _ in 0..t {
        num *= BigInt::from(t);
    }
    for i in 2..=t {
        num *= BigInt::from(i);
    }
    let mut den = BigInt::one();
    for i in 2..=(2 * t) {
        den *= BigInt::from(i);
    }
    let value = BigRational::new(num, den);

    // Dual route: the telescoping product must agree exactly.
    let mut product = BigRational::one();
    for j in 0..t {
        product *= ratio(t as i64, (2 * t - j) as i64);
    }
    debug_assert_eq!(value, product);
    Ok(value)
}

/// Stirling approximation of [`weak_sequential_exact`]: `(1/√2)·(e/4)^t`.
pub fn weak_sequential_stirling(t: usize) -> f64 {
    assert!(t >= 1);
    (E / 4.0).powi(t as i32) / SQRT_2
}

/// Quantum query budget `⌈(π/4)·√b⌉` per player.
pub fn grover_query_budget(b: usize) -> Result<usize> {
    if b < 1 {
        return Err(Error::InvalidN { n: b, reason: "need b >= 1" });
    }
    let budget = (FRAC_PI_4 * (b as f64).sqrt()).ceil() as usize;
    let planned = plan_exact_grover(b)?.iterations;
    assert!(
        budget + 1 >= planned,
        "budget {budget} too far below planned iterations {planned} at b={b}"
    );
    Ok(budget)
}

/// Exact team success probability by enumerating every placement and
/// replaying the strategy through real query sessions.
///
/// Only deterministic replays are enumerable: pointer-following (optionally
/// through a fixed shared relabelling). The naive strategy is accepted only
/// at `budget ≥ n`, where it opens everything and wins outright.
pub fn brute_force_team_success(
    n: usize,
    budget: usize,
    kind: &StrategyKind,
) -> Result<BigRational> {
    brute_force_with_shared(n, budget, kind, None)
}

/// As [`brute_force_team_success`], with an explicit shared relabelling for
/// the shuffled-pointer strategy.
pub fn brute_force_with_shared(
    n: usize,
    budget: usize,
    kind: &StrategyKind,
    shared: Option<&Permutation>,
) -> Result<BigRational> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "enumeration size",
            value: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    if n < 1 {
        return Err(Error::InvalidN { n, reason: "need n >= 1" });
    }
    match kind {
        StrategyKind::Naive(_) => {
            return if budget >= n {
                Ok(BigRational::one())
            } else {
                Err(Error::NotDeterministic)
            };
        }
        StrategyKind::ShuffledPointer(_) if shared.is_none() => {
            return Err(Error::NotDeterministic);
        }
        _ => {}
    }

    let mut rng = rng_from_seed(0); // never consulted: fallback is ignored for wins
    let mut wins = 0u64;
    let mut total = 0u64;
    for perm in (1..=n).permutations(n) {
        total += 1;
        let placement = Placement::from_permutation(&Permutation::new(perm)?);
        let mut all = true;
        for player in 1..=n {
            let mut session = QuerySession::new(&placement, None, player, budget)?;
            let play = match kind {
                StrategyKind::Pointer(_) => {
                    pointer_player(&mut session, Fallback::None, &mut rng)?
                }
                StrategyKind::ShuffledPointer(_) => {
                    shuffled_pointer_player(&mut session, shared, Fallback::None, &mut rng)?
                }
                StrategyKind::Naive(_) => unreachable!(),
            };
            if !play.found {
                all = false;
                break;
            }
        }
        if all {
            wins += 1;
        }
    }
    Ok(BigRational::new(BigInt::from(wins), BigInt::from(total)))
}

/// The n-th harmonic number as an exact rational.
pub fn harmonic(n: usize) -> BigRational {
    let mut sum = BigRational::zero();
    for k in 1..=n {
        sum += ratio(1, k as i64);
    }
    sum
}

/// Pearson statistic `Σ (observed − expected)² / expected`.
pub fn chi_square_statistic(observed: &[u64], expected: &[f64]) -> f64 {
    assert_eq!(observed.len(), expected.len());
    observed
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            let d = o as f64 - e;
            d * d / e
        })
        .sum()
}

fn isqrt(n: usize) -> usize {
    let mut r = (n as f64).sqrt() as usize;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    while r * r > n {
        r -= 1;
    }
    r
}

/// Convenience: relative gap |approx/exact − 1|.
pub fn relative_error(approx: f64, exact: &BigRational) -> f64 {
    let e = ratio_to_f64(exact);
    ((approx - e) / e).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_small_values() {
        assert_eq!(pointer_failure_exact(2).unwrap(), ratio(1, 2));
        assert_eq!(pointer_failure_exact(4).unwrap(), ratio(7, 12)); // 1/3 + 1/4
        assert!(pointer_failure_exact(3).is_err());
        assert!(pointer_failure_exact(0).is_err());
    }

    #[test]
    fn eq1_limit_f64() {
        assert!((pointer_failure_f64(1_000_000) - LN_2).abs() < 1e-5);
    }

    #[test]
    fn success_limit_value() {
        let v = pointer_success_limit();
        assert!((v - 0.306_852_819_440_054_7).abs() < 1e-15);
    }

    #[test]
    fn success_monotone_decreasing_above_limit() {
        let mut prev: Option<BigRational> = None;
        for n in (2..=200).step_by(2) {
            let failure = pointer_failure_exact(n).unwrap();
            assert!(ratio_to_f64(&failure) < LN_2, "n={n}");
            if let Some(p) = prev {
                assert!(failure > p, "failure not increasing at n={n}");
            }
            prev = Some(failure);
        }
    }

    #[test]
    fn harmonic_identity() {
        for n in (2..=200).step_by(2) {
            let lhs = pointer_failure_exact(n).unwrap();
            let rhs = harmonic(n) - harmonic(n / 2);
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn sqrt_budget_bound_values() {
        assert_eq!(sqrt_budget_bound(1).unwrap(), BigRational::one());
        assert_eq!(sqrt_budget_bound(4).unwrap(), ratio(1, 2));
        assert_eq!(sqrt_budget_bound(100).unwrap(), ratio(1, 3_628_800));
    }

    #[test]
    fn weak_sequential_values() {
        assert_eq!(weak_sequential_exact(1).unwrap(), ratio(1, 2));
        assert_eq!(weak_sequential_exact(2).unwrap(), ratio(1, 3));
        assert_eq!(weak_sequential_exact(4).unwrap(), ratio(6144, 40320));
    }

    #[test]
    fn stirling_identity_and_convergence() {
        // √(e/4) ≈ 0.8244: (e/4)^t = 0.824^{2t} to within 0.2% per factor pair.
        let base = (E / 4.0).sqrt();
        assert!((base / 0.824 - 1.0).abs() < 0.002);

        let mut prev = f64::INFINITY;
        for t in 8..=64 {
            let err = relative_error(weak_sequential_stirling(t), &weak_sequential_exact(t).unwrap());
            assert!(err < 0.10, "t={t}: rel err {err}");
            assert!(err < prev, "t={t}: error not decreasing");
            prev = err;
        }
    }

    #[test]
    fn grover_budget_values() {
        assert_eq!(grover_query_budget(64).unwrap(), 7);
        assert_eq!(grover_query_budget(100).unwrap(), 8);
        assert_eq!(grover_query_budget(1).unwrap(), 1);
    }

    #[test]
    fn brute_force_pointer_small() {
        let kind = StrategyKind::Pointer(Fallback::None);
        assert_eq!(brute_force_team_success(4, 2, &kind).unwrap(), ratio(10, 24));
        assert_eq!(
            brute_force_team_success(6, 3, &kind).unwrap(),
            BigRational::one() - pointer_failure_exact(6).unwrap()
        );
    }

    #[test]
    fn brute_force_full_budget_always_wins() {
        let pointer = StrategyKind::Pointer(Fallback::None);
        let naive = StrategyKind::Naive(Fallback::None);
        assert_eq!(brute_force_team_success(5, 5, &pointer).unwrap(), BigRational::one());
        assert_eq!(brute_force_team_success(5, 5, &naive).unwrap(), BigRational::one());
    }

    #[test]
    fn brute_force_rejects_randomized_or_large() {
        let naive = StrategyKind::Naive(Fallback::None);
        assert!(matches!(
            brute_force_team_success(4, 2, &naive),
            Err(Error::NotDeterministic)
        ));
        let pointer = StrategyKind::Pointer(Fallback::None);
        assert!(matches!(
            brute_force_team_success(9, 4, &pointer),
            Err(Error::TooLarge { .. })
        ));
        let shuffled = StrategyKind::ShuffledPointer(Fallback::None);
        assert!(matches!(
            brute_force_team_success(4, 2, &shuffled),
            Err(Error::NotDeterministic)
        ));
    }

    #[test]
    fn brute_force_shuffled_with_fixed_tau_matches_pointer_on_identity() {
        let pointer = StrategyKind::Pointer(Fallback::None);
        let shuffled = StrategyKind::ShuffledPointer(Fallback::None);
        let tau = Permutation::identity(5);
        assert_eq!(
            brute_force_with_shared(5, 2, &shuffled, Some(&tau)).unwrap(),
            brute_force_team_success(5, 2, &pointer).unwrap()
        );
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(1), 1);
        assert_eq!(isqrt(3), 1);
        assert_eq!(isqrt(4), 2);
        assert_eq!(isqrt(99), 9);
        assert_eq!(isqrt(100), 10);
    }
}
