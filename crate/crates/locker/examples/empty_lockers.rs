//! The empty-lockers variant: b > n lockers, so pointer chains can dead-end
//! in an empty locker and classical play degrades, while the quantum search
//! works over the full address space unchanged.

use locker_puzzle::game::{GameConfig, OracleKind, RefereeMode, Variant};
use locker_puzzle::quantum::run_quantum_team_game;
use locker_puzzle::rng::derive_seed;
use locker_puzzle::strategy::{run_team_game, Fallback, StrategyKind};

fn main() {
    let n = 8usize;
    let trials = 400_000u64;
    println!("naive weak-oracle play, n = {n}, budget n/2 = {}, {trials} trials:", n / 2);
    let naive = StrategyKind::Naive(Fallback::None);
    for b in [8usize, 10, 12, 16] {
        let cfg = GameConfig {
            n,
            b,
            budget: n / 2,
            variant: if b == n { Variant::Standard } else { Variant::EmptyLockers },
            oracle: OracleKind::Weak,
            referee: RefereeMode::Uniform,
            seed: 0,
        };
        let wins = (0..trials)
            .filter(|&i| run_team_game(&cfg, &naive, derive_seed(4, i)).unwrap().team_win)
            .count();
        let expected = ((n / 2) as f64 / b as f64).powi(n as i32);
        println!(
            "  b = {b:>3}: team frequency {:.6} (closed form {expected:.6})",
            wins as f64 / trials as f64
        );
    }

    let n = 32usize;
    println!("\nquantum players, n = {n}, 200 games each:");
    for b in [48usize, 64, 128] {
        let cfg = GameConfig {
            n,
            b,
            budget: n / 2,
            variant: Variant::EmptyLockers,
            oracle: OracleKind::Weak,
            referee: RefereeMode::Uniform,
            seed: 0,
        };
        let mut wins = 0usize;
        let mut max_q = 0usize;
        for i in 0..200u64 {
            let out = run_quantum_team_game(&cfg, derive_seed(5, i)).unwrap();
            wins += out.team_win as usize;
            max_q = max_q.max(out.max_queries());
        }
        println!("  b = {b:>3}: {wins}/200 wins, worst query count {max_q}");
    }
}
