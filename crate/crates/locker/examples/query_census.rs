//! Team-wide query accounting for quantum play: each player spends
//! ~π/4·√b queries, so the team total is Θ(n√b) — and Ω(n√b) is known to
//! be necessary, so the plan is optimal up to the constant.

use locker_puzzle::quantum::total_query_census;

fn main() {
    println!(
        "{:>6} {:>6} {:>12} {:>12} {:>10}",
        "n", "b", "per player", "team total", "n·√b ratio"
    );
    for (n, b) in [(16usize, 16usize), (64, 64), (256, 256), (1024, 1024), (64, 4096)] {
        let (per_player, team_total) = total_query_census(n, b).unwrap();
        let ratio = team_total as f64 / (n as f64 * (b as f64).sqrt());
        println!("{n:>6} {b:>6} {per_player:>12} {team_total:>12} {ratio:>10.4}");
    }
    println!("\nthe ratio stays near π/4 ≈ 0.7854 as n and b grow.");
}
