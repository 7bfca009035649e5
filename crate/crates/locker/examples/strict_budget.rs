//! The stricter √n-budget game: classical teams win with probability at
//! most 1/⌊√n⌋!, while quantum players are untouched (they never needed
//! more than ~π/4·√n queries). The sequential reveal game attains the
//! bound with equality under uniform choices.

use locker_puzzle::analytics::{ratio_to_f64, sqrt_budget_bound};
use locker_puzzle::game::{GameConfig, OracleKind, RefereeMode, Variant};
use locker_puzzle::rng::derive_seed;
use locker_puzzle::strategy::{run_team_game, sequential_reveal_game, Fallback, StrategyKind};

fn main() {
    let trials = 20_000u64;
    println!("pointer-following at budget ⌊√n⌋, {trials} trials:");
    for n in [16usize, 64, 100] {
        let budget = (n as f64).sqrt() as usize;
        let cfg = GameConfig {
            n,
            b: n,
            budget,
            variant: Variant::Standard,
            oracle: OracleKind::Strong,
            referee: RefereeMode::Uniform,
            seed: 0,
        };
        let kind = StrategyKind::Pointer(Fallback::None);
        let wins = (0..trials)
            .filter(|&i| run_team_game(&cfg, &kind, derive_seed(1, i)).unwrap().team_win)
            .count();
        let bound = ratio_to_f64(&sqrt_budget_bound(n).unwrap());
        println!(
            "  n = {n:>3}, budget {budget:>2}: frequency {:.5}, bound 1/{:>2}! = {bound:.2e}",
            wins as f64 / trials as f64,
            budget
        );
    }

    println!("\nsequential reveal game (N² players, N lockers per round) vs 1/N!:");
    for n_rounds in [2usize, 3, 4, 5] {
        let wins = (0..trials)
            .filter(|&i| sequential_reveal_game(n_rounds, derive_seed(2, i)))
            .count();
        let exact = 1.0 / (1..=n_rounds).product::<usize>() as f64;
        println!(
            "  N = {n_rounds}: frequency {:.5} vs {exact:.5}",
            wins as f64 / trials as f64
        );
    }
}
