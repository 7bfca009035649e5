//! The two classical baselines of the standard game: naive random opening
//! (team wins with probability 1/2^n) versus pointer-following, whose
//! success converges to 1 − ln 2 ≈ 0.30685 from above.

use locker_puzzle::analytics::{pointer_failure_exact, pointer_success_limit, ratio_to_f64};
use locker_puzzle::harness::{run_experiment, ExperimentConfig, StrategyChoice};

fn main() {
    println!("naive vs pointer, n/2 budget, 50k trials each\n");
    println!("{:>4} {:>12} {:>12} {:>12}", "n", "naive", "pointer", "closed form");
    for n in [4usize, 8, 16, 32] {
        let mut freqs = Vec::new();
        for strategy in [StrategyChoice::Naive, StrategyChoice::Pointer] {
            let cfg = ExperimentConfig::standard(n, strategy, 50_000, 42);
            let report = run_experiment(&cfg).expect("valid configuration");
            freqs.push(report.rows[0].frequency);
        }
        let exact = 1.0 - ratio_to_f64(&pointer_failure_exact(n).unwrap());
        println!("{n:>4} {:>12.5} {:>12.5} {exact:>12.5}", freqs[0], freqs[1]);
    }

    println!("\npointer success decreases towards 1 - ln 2 = {:.5}:", pointer_success_limit());
    for n in [10usize, 100, 1000, 10_000] {
        let exact = 1.0 - ratio_to_f64(&pointer_failure_exact(n).unwrap());
        println!("  n = {n:>6}: {exact:.6}");
    }
}
