//! The sequential weak-oracle game: 2t players, t yes/no queries each,
//! previously found lockers are removed. The team wins with probability
//! t^t·t!/(2t)!, which the Stirling form (1/√2)(e/4)^t tracks closely —
//! exponentially small, unlike pointer-following's constant rate.

use locker_puzzle::analytics::{ratio_to_f64, weak_sequential_exact, weak_sequential_stirling};
use locker_puzzle::rng::derive_seed;
use locker_puzzle::strategy::weak_sequential_game;

fn main() {
    let trials = 200_000u64;
    println!(
        "{:>3} {:>12} {:>14} {:>14}",
        "t", "simulated", "exact", "Stirling"
    );
    for t in 1usize..=6 {
        let wins = (0..trials)
            .filter(|&i| weak_sequential_game(t, derive_seed(t as u64, i)))
            .count();
        let exact = ratio_to_f64(&weak_sequential_exact(t).unwrap());
        println!(
            "{t:>3} {:>12.6} {exact:>14.6} {:>14.6}",
            wins as f64 / trials as f64,
            weak_sequential_stirling(t)
        );
    }

    println!("\nexact vs Stirling for larger t (relative error shrinks):");
    for t in [8usize, 16, 32] {
        let exact = ratio_to_f64(&weak_sequential_exact(t).unwrap());
        let stirling = weak_sequential_stirling(t);
        println!(
            "  t = {t:>2}: exact {exact:.3e}, Stirling {stirling:.3e}, rel err {:.4}",
            (stirling - exact).abs() / exact
        );
    }
}
