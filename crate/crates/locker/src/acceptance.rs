//! The release gate: twelve numbered checks covering the classical closed
//! forms, the sequential analysis games, and the quantum engine's certainty
//! and query budgets. Both `locker verify` and the acceptance test target
//! run [`run_all`] and report one line per criterion.

use num_rational::BigRational;
use num_traits::One;

use std::f64::consts::{FRAC_PI_4, LN_2};

use crate::analytics::{
    brute_force_team_success, grover_query_budget, pointer_failure_exact, pointer_failure_f64,
    ratio_to_f64, relative_error, weak_sequential_exact, weak_sequential_stirling,
};
use crate::game::{GameConfig, OracleKind, RefereeMode, Variant};
use crate::oracle::{sample_colouring, sample_placement};
use crate::perm::{Colour, Colouring};
use crate::quantum::{
    plan_exact_grover, run_quantum_team_game, standard_grover_probability, total_query_census,
    quantum_colour_player, CERTAINTY_TOL,
};
use crate::rng::{derive_seed, rng_from_seed};
use crate::strategy::{
    run_team_game, sequential_reveal_game, weak_sequential_game, Fallback, StrategyKind,
};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CriterionResult {
    fn new(id: usize, name: &'static str, pass: bool, detail: String) -> Self {
        Self { id, name, pass, detail }
    }

    pub fn line(&self) -> String {
        format!(
            "criterion {:2} [{}] {} — {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.detail
        )
    }
}

const SEED_BASE: u64 = 0x10C4_E55E_D000;

fn mc_frequency(trials: u64, seed_tag: u64, mut game: impl FnMut(u64) -> bool) -> f64 {
    let wins = (0..trials)
        .filter(|&i| game(derive_seed(SEED_BASE + seed_tag, i)))
        .count();
    wins as f64 / trials as f64
}

fn within_3_sigma(freq: f64, p: f64, trials: u64) -> (bool, f64) {
    let sigma3 = 3.0 * (p * (1.0 - p) / trials as f64).sqrt();
    ((freq - p).abs() <= sigma3, sigma3)
}

fn standard_cfg(n: usize, budget: usize, oracle: OracleKind, referee: RefereeMode) -> GameConfig {
    GameConfig {
        n,
        b: n,
        budget,
        variant: Variant::Standard,
        oracle,
        referee,
        seed: 0,
    }
}

/// 1. Exhaustive pointer enumeration equals the long-cycle sum exactly.
pub fn criterion_1() -> CriterionResult {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in [2usize, 4, 6, 8] {
        let bf = brute_force_team_success(n, n / 2, &StrategyKind::Pointer(Fallback::None))
            .expect("enumerable");
        let expected = BigRational::one() - pointer_failure_exact(n).expect("even n");
        if bf != expected {
            pass = false;
        }
        parts.push(format!("n={n}: {bf}"));
    }
    CriterionResult::new(1, "long-cycle formula exactness", pass, parts.join(", "))
}

/// 2. The failure sum converges to ln 2 from below; success is monotone
/// decreasing and stays above 1 − ln 2.
pub fn criterion_2() -> CriterionResult {
    let gap = (pointer_failure_f64(1_000_000) - LN_2).abs();
    let mut pass = gap < 1e-5;
    let mut prev: Option<BigRational> = None;
    for n in (2..=200).step_by(2) {
        let failure = pointer_failure_exact(n).expect("even n");
        if ratio_to_f64(&failure) >= LN_2 {
            pass = false;
        }
        if let Some(p) = &prev {
            if &failure <= p {
                pass = false;
            }
        }
        prev = Some(failure);
    }
    CriterionResult::new(
        2,
        "ln 2 limit and monotone approach",
        pass,
        format!("|sum(10^6) − ln 2| = {gap:.2e}; success decreasing over n = 2..200"),
    )
}

/// 3. Naive baseline at n = 4, budget 2 reproduces 1/2^n.
pub fn criterion_3() -> CriterionResult {
    let trials = 100_000;
    let cfg = standard_cfg(4, 2, OracleKind::Weak, RefereeMode::Uniform);
    let kind = StrategyKind::Naive(Fallback::None);
    let freq = mc_frequency(trials, 3, |seed| {
        run_team_game(&cfg, &kind, seed).expect("valid game").team_win
    });
    let (ok, sigma3) = within_3_sigma(freq, 1.0 / 16.0, trials);
    CriterionResult::new(
        3,
        "naive baseline 1/2^n",
        ok,
        format!("frequency {freq:.5} vs 1/16 = 0.0625 (3σ = {sigma3:.5})"),
    )
}

/// 4. Exact search certainty with bounded queries across search-space sizes.
pub fn criterion_4() -> CriterionResult {
    let mut pass = true;
    let mut worst: f64 = 1.0;
    let mut detail = Vec::new();
    for &b in &[2usize, 4, 16, 100, 1000] {
        let plan = plan_exact_grover(b).expect("within cap");
        let theta = (1.0 / (b as f64).sqrt()).asin();
        let bound = (std::f64::consts::PI / (4.0 * theta)).ceil() as usize + 1;
        if plan.iterations > bound {
            pass = false;
        }
        let mut rng = rng_from_seed(SEED_BASE + 4 + b as u64);
        for _ in 0..10 {
            let marked = rand::Rng::gen_range(&mut rng, 1..=b);
            let state = plan.execute(Some(marked)).expect("within cap");
            let p = state.probability(marked);
            worst = worst.min(p);
            if p < 1.0 - CERTAINTY_TOL {
                pass = false;
            }
        }
        detail.push(format!("b={b}: J={}≤{bound}", plan.iterations));
    }
    CriterionResult::new(
        4,
        "quantum certainty",
        pass,
        format!("{}; worst success 1 − {:.1e}", detail.join(", "), 1.0 - worst),
    )
}

/// 5. Plain Grover at b = 100 with 7 iterations succeeds with ≥ 0.99.
pub fn criterion_5() -> CriterionResult {
    let k = (FRAC_PI_4 * 10.0).floor() as usize;
    let p = standard_grover_probability(100, k).expect("valid");
    CriterionResult::new(
        5,
        "standard Grover failure bound",
        k == 7 && p >= 0.99,
        format!("success after {k} iterations: {p:.6}"),
    )
}

/// 6. Quantum team at n = b = 64 always wins within 7 queries per player.
pub fn criterion_6() -> CriterionResult {
    let cfg = standard_cfg(64, 32, OracleKind::Weak, RefereeMode::Uniform);
    let mut wins = 0u64;
    let mut max_q = 0usize;
    for i in 0..100u64 {
        let out =
            run_quantum_team_game(&cfg, derive_seed(SEED_BASE + 6, i)).expect("valid game");
        wins += out.team_win as u64;
        max_q = max_q.max(out.max_queries());
    }
    let pass = wins == 100 && max_q <= 7 && max_q < 32;
    CriterionResult::new(
        6,
        "quantum team game",
        pass,
        format!("100/100 games won: {}; max per-player queries {max_q} ≤ 7 < 32", wins == 100),
    )
}

/// 7. The sequential reveal game attains 1/N! under uniform choices.
pub fn criterion_7() -> CriterionResult {
    let trials = 100_000;
    let mut pass = true;
    let mut parts = Vec::new();
    for (n_rounds, factorial) in [(2usize, 2u64), (3, 6), (4, 24)] {
        let p = 1.0 / factorial as f64;
        let freq = mc_frequency(trials, 70 + n_rounds as u64, |seed| {
            sequential_reveal_game(n_rounds, seed)
        });
        let (ok, _) = within_3_sigma(freq, p, trials);
        if !ok {
            pass = false;
        }
        parts.push(format!("N={n_rounds}: {freq:.5} vs {p:.5}"));
    }
    CriterionResult::new(7, "sequential reveal game 1/N!", pass, parts.join(", "))
}

/// 8. The weak-oracle sequential game matches t^t·t!/(2t)! and its Stirling
/// approximation is within 10% for t ≥ 8.
pub fn criterion_8() -> CriterionResult {
    let trials = 100_000;
    let mut pass = true;
    let mut parts = Vec::new();
    for t in 1..=4usize {
        let p = ratio_to_f64(&weak_sequential_exact(t).expect("t >= 1"));
        let freq = mc_frequency(trials, 80 + t as u64, |seed| weak_sequential_game(t, seed));
        let (ok, _) = within_3_sigma(freq, p, trials);
        if !ok {
            pass = false;
        }
        parts.push(format!("t={t}: {freq:.5} vs {p:.5}"));
    }
    let mut worst_err: f64 = 0.0;
    for t in 8..=32usize {
        let err = relative_error(
            weak_sequential_stirling(t),
            &weak_sequential_exact(t).expect("t >= 1"),
        );
        worst_err = worst_err.max(err);
        if err > 0.10 {
            pass = false;
        }
    }
    parts.push(format!("Stirling worst rel err (t=8..32): {worst_err:.4}"));
    CriterionResult::new(8, "weak-oracle sequential game", pass, parts.join(", "))
}

/// 9. The cheating referee beats plain pointer-following, shared randomness
/// restores the uniform-referee rate, and quantum players never notice.
pub fn criterion_9() -> CriterionResult {
    let n = 100;
    let trials = 10_000;
    let plain_cfg = standard_cfg(n, n / 2, OracleKind::Strong, RefereeMode::Cheating);
    let plain_kind = StrategyKind::Pointer(Fallback::UniformUnopened);
    let plain_freq = mc_frequency(trials, 90, |seed| {
        run_team_game(&plain_cfg, &plain_kind, seed).expect("valid game").team_win
    });

    let shuffled_kind = StrategyKind::ShuffledPointer(Fallback::UniformUnopened);
    let shuffled_freq = mc_frequency(trials, 91, |seed| {
        run_team_game(&plain_cfg, &shuffled_kind, seed).expect("valid game").team_win
    });
    let expected = 1.0 - ratio_to_f64(&pointer_failure_exact(n).expect("even n"));
    let (shuffled_ok, sigma3) = within_3_sigma(shuffled_freq, expected, trials);

    let mut quantum_wins = 0u64;
    for i in 0..100u64 {
        let out = run_quantum_team_game(&plain_cfg, derive_seed(SEED_BASE + 92, i))
            .expect("valid game");
        quantum_wins += out.team_win as u64;
    }

    let pass = plain_freq <= 1e-3 && shuffled_ok && quantum_wins == 100;
    CriterionResult::new(
        9,
        "cheating referee and defenses",
        pass,
        format!(
            "plain pointer {plain_freq:.1e} ≤ 1e-3; shuffled {shuffled_freq:.4} vs {expected:.4} (3σ = {sigma3:.4}); quantum {quantum_wins}/100"
        ),
    )
}

/// 10. Coloured slips: every colour announced correctly within the budget,
/// under adversarial and random colourings.
pub fn criterion_10() -> CriterionResult {
    let (n, b) = (32usize, 64usize);
    let budget = grover_query_budget(b).expect("b >= 1") + 2;
    let mut pass = true;
    let mut max_q = 0usize;
    let mut checked = 0u64;
    for instance in 0..200u64 {
        let seed = derive_seed(SEED_BASE + 100, instance);
        let placement = sample_placement(n, b, derive_seed(seed, 0)).expect("b >= n");
        let colouring = match instance % 3 {
            0 => Colouring::uniform(n, Colour::Red),
            1 => Colouring::uniform(n, Colour::Blue),
            _ => sample_colouring(n, derive_seed(seed, 2)),
        };
        for player in 1..=n {
            let (answer, q) =
                quantum_colour_player(&placement, &colouring, player, derive_seed(seed, 16 + player as u64))
                    .expect("valid");
            if answer != colouring.colour(player) || q > budget {
                pass = false;
            }
            max_q = max_q.max(q);
            checked += 1;
        }
    }
    CriterionResult::new(
        10,
        "coloured slips protocol",
        pass,
        format!("{checked} colour announcements correct; max queries {max_q} ≤ {budget}"),
    )
}

/// 11. Empty lockers: quantum team at n = 32, b = 128 wins every game within
/// the ⌈π/4·√b⌉ + 1 budget.
pub fn criterion_11() -> CriterionResult {
    let (n, b) = (32usize, 128usize);
    let budget = grover_query_budget(b).expect("b >= 1") + 1;
    let cfg = GameConfig {
        n,
        b,
        budget,
        variant: Variant::EmptyLockers,
        oracle: OracleKind::Weak,
        referee: RefereeMode::Uniform,
        seed: 0,
    };
    let mut wins = 0u64;
    let mut max_q = 0usize;
    let games = 50u64;
    for i in 0..games {
        let out =
            run_quantum_team_game(&cfg, derive_seed(SEED_BASE + 110, i)).expect("valid game");
        wins += out.team_win as u64;
        max_q = max_q.max(out.max_queries());
    }
    let pass = wins == games && max_q <= budget;
    CriterionResult::new(
        11,
        "empty lockers quantum team",
        pass,
        format!("{wins}/{games} games won; max queries {max_q} ≤ {budget}"),
    )
}

/// 12. Team query totals sit at the Θ(n√n) order the lower bound predicts.
pub fn criterion_12() -> CriterionResult {
    let mut pass = true;
    let mut parts = Vec::new();
    for &n in &[64usize, 256, 1024] {
        let (_, total) = total_query_census(n, n).expect("in range");
        let ratio = total as f64 / (n as f64 * (n as f64).sqrt());
        if !(0.5..=1.2).contains(&ratio) {
            pass = false;
        }
        parts.push(format!("n={n}: total {total}, ratio {ratio:.3}"));
    }
    CriterionResult::new(12, "query order consistency", pass, parts.join(", "))
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
        criterion_11(),
        criterion_12(),
    ]
}

/// Extra property asserted alongside criterion 9: pointer-following under
/// the cheating referee is not merely rare but structurally impossible (the
/// planted cycle exceeds every player's budget).
pub fn cheating_pointer_never_finds(seed_tag: u64, trials: u64) -> bool {
    let cfg = standard_cfg(100, 50, OracleKind::Strong, RefereeMode::Cheating);
    let kind = StrategyKind::Pointer(Fallback::None);
    (0..trials).all(|i| {
        let out = run_team_game(&cfg, &kind, derive_seed(seed_tag, i)).expect("valid game");
        !out.team_win
    })
}
