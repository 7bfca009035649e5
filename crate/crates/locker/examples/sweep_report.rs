//! Programmatic use of the experiment harness: sweep n, run trials, and
//! print the resulting report as CSV — the same format the `locker`
//! binary emits with `--out`.

use locker_puzzle::harness::{run_experiment, to_csv, ExperimentConfig, StrategyChoice};

fn main() {
    let mut cfg = ExperimentConfig::standard(4, StrategyChoice::Pointer, 20_000, 7);
    cfg.sweep = vec![("n".to_string(), vec![4, 8, 16, 32, 64])];
    let report = run_experiment(&cfg).expect("valid configuration");
    print!("{}", to_csv(&report));
}
