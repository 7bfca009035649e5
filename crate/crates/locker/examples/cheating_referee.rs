//! An adversarial referee plants a cycle of length n/2 + 2, which defeats
//! plain pointer-following every single time. Two defenses: a shared
//! random relabelling restores the uniform-case rate, and quantum players
//! never cared about cycle structure in the first place.

use locker_puzzle::analytics::{pointer_failure_exact, ratio_to_f64};
use locker_puzzle::game::{GameConfig, OracleKind, RefereeMode, Variant};
use locker_puzzle::quantum::run_quantum_team_game;
use locker_puzzle::rng::derive_seed;
use locker_puzzle::strategy::{run_team_game, Fallback, StrategyKind};

fn main() {
    let n = 100usize;
    let trials = 5_000u64;
    let cfg = |oracle| GameConfig {
        n,
        b: n,
        budget: n / 2,
        variant: Variant::Standard,
        oracle,
        referee: RefereeMode::Cheating,
        seed: 0,
    };

    let plain = StrategyKind::Pointer(Fallback::None);
    let plain_wins = (0..trials)
        .filter(|&i| run_team_game(&cfg(OracleKind::Strong), &plain, derive_seed(1, i)).unwrap().team_win)
        .count();
    println!("plain pointer vs cheating referee, n = {n}: {plain_wins}/{trials} wins");

    let shuffled = StrategyKind::ShuffledPointer(Fallback::None);
    let shuffled_wins = (0..trials)
        .filter(|&i| {
            run_team_game(&cfg(OracleKind::Strong), &shuffled, derive_seed(2, i)).unwrap().team_win
        })
        .count();
    let uniform_rate = 1.0 - ratio_to_f64(&pointer_failure_exact(n).unwrap());
    println!(
        "shared-relabelling pointer:              {shuffled_wins}/{trials} wins \
         ({:.4}, uniform-case rate {uniform_rate:.4})",
        shuffled_wins as f64 / trials as f64
    );

    let quantum_trials = 200u64;
    let q_wins = (0..quantum_trials)
        .filter(|&i| run_quantum_team_game(&cfg(OracleKind::Weak), derive_seed(3, i)).unwrap().team_win)
        .count();
    println!("quantum players:                         {q_wins}/{quantum_trials} wins");
}
