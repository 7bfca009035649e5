//! Classical player strategies and the sequential analysis games.
//!
//! A player's win is opening a locker that holds his own label. When he runs
//! out of budget without finding it he still announces a guess; the guess is
//! recorded (it is what the cheating-referee discussion is about) but never
//! counts towards the team win.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use std::fmt;
use std::str::FromStr;

use crate::game::{GameConfig, OracleKind, RefereeMode, TeamOutcome, Variant};
use crate::oracle::{
    cheating_permutation, sample_colouring, sample_permutation, sample_placement, QuerySession,
};
use crate::perm::{Colouring, Permutation, Placement};
use crate::rng::{derive_seed, rng_from_seed};
use crate::{Error, Result};

/// What a player announces when his budget expires without a find.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fallback {
    /// Announce nothing; the player concedes.
    None,
    /// Guess uniformly among the lockers he did not open.
    UniformUnopened,
    /// Guess the locker named by the last label he saw.
    LastSeenPointer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyKind {
    Naive(Fallback),
    Pointer(Fallback),
    ShuffledPointer(Fallback),
}

impl StrategyKind {
    pub fn fallback(&self) -> Fallback {
        match *self {
            StrategyKind::Naive(f) | StrategyKind::Pointer(f) | StrategyKind::ShuffledPointer(f) => f,
        }
    }

    /// Oracles this strategy can play against.
    pub fn compatible_with(&self, oracle: OracleKind) -> bool {
        match self {
            StrategyKind::Naive(_) => matches!(oracle, OracleKind::Weak | OracleKind::Strong),
            StrategyKind::Pointer(_) | StrategyKind::ShuffledPointer(_) => {
                oracle == OracleKind::Strong
            }
        }
    }
}

impl fmt::Display for Fallback {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Fallback::None => "none",
            Fallback::UniformUnopened => "uniform-unopened",
            Fallback::LastSeenPointer => "last-seen-pointer",
        };
        write!(f, "{s}")
    }
}

impl FromStr for Fallback {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Fallback::None),
            "uniform-unopened" => Ok(Fallback::UniformUnopened),
            "last-seen-pointer" => Ok(Fallback::LastSeenPointer),
            other => Err(Error::Config(format!("unknown fallback '{other}'"))),
        }
    }
}

/// One player's run: whether he opened his own label, what he announced,
/// and how many queries he spent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlayerPlay {
    pub found: bool,
    pub guess: Option<usize>,
    pub queries: usize,
}

fn uniform_unopened(session: &QuerySession<'_>, rng: &mut ChaCha8Rng) -> Option<usize> {
    let unopened: Vec<usize> = (1..=session.b()).filter(|&x| !session.has_opened(x)).collect();
    if unopened.is_empty() {
        None
    } else {
        Some(unopened[rng.gen_range(0..unopened.len())])
    }
}

/// Open `budget` uniformly chosen distinct lockers, stopping early on a find.
pub fn naive_player(
    session: &mut QuerySession<'_>,
    fallback: Fallback,
    rng: &mut ChaCha8Rng,
) -> Result<PlayerPlay> {
    let b = session.b();
    let picks = session.budget().min(b);
    let mut choices = rand::seq::index::sample(rng, b, picks).into_vec();
    for c in &mut choices {
        *c += 1;
    }
    for x in choices {
        if session.weak_query(x)? {
            return Ok(PlayerPlay {
                found: true,
                guess: Some(x),
                queries: session.used(),
            });
        }
    }
    // The last-seen-pointer rule has nothing to point at here: weak answers
    // reveal no labels. Fall through to the uniform guess.
    let guess = match fallback {
        Fallback::None => None,
        Fallback::UniformUnopened | Fallback::LastSeenPointer => uniform_unopened(session, rng),
    };
    Ok(PlayerPlay {
        found: false,
        guess,
        queries: session.used(),
    })
}

/// Open one's own locker number and then follow revealed labels.
pub fn pointer_player(
    session: &mut QuerySession<'_>,
    fallback: Fallback,
    rng: &mut ChaCha8Rng,
) -> Result<PlayerPlay> {
    shuffled_pointer_player(session, None, fallback, rng)
}

/// Pointer-following through a shared relabelling: "locker j" is addressed
/// as the physical locker `τ(j)`. With `τ` uniform and secret, the effective
/// permutation the player walks is uniform no matter what the referee chose.
pub fn shuffled_pointer_player(
    session: &mut QuerySession<'_>,
    shared: Option<&Permutation>,
    fallback: Fallback,
    rng: &mut ChaCha8Rng,
) -> Result<PlayerPlay> {
    if let Some(tau) = shared {
        if tau.len() != session.b() {
            return Err(Error::Config(format!(
                "shared permutation has size {}, expected {}",
                tau.len(),
                session.b()
            )));
        }
    }
    let address = |j: usize| shared.map_or(j, |tau| tau.apply(j));
    let player = session.player();
    let mut logical = player;
    let mut last_label = None;
    for _ in 0..session.budget() {
        let physical = address(logical);
        let label = session.strong_query(physical)?.ok_or(Error::EmptyLockerEncountered {
            player,
            locker: physical,
        })?;
        if label == player {
            return Ok(PlayerPlay {
                found: true,
                guess: Some(physical),
                queries: session.used(),
            });
        }
        last_label = Some(label);
        logical = label;
    }
    let guess = match fallback {
        Fallback::None => None,
        Fallback::UniformUnopened => uniform_unopened(session, rng),
        Fallback::LastSeenPointer => last_label.map(address),
    };
    Ok(PlayerPlay {
        found: false,
        guess,
        queries: session.used(),
    })
}

/// Play every player of one team against a fixed referee state.
///
/// `shared` supplies the relabelling for the shuffled-pointer strategy; when
/// absent a fresh uniform one is drawn from `seed`.
pub fn play_team(
    placement: &Placement,
    colouring: Option<&Colouring>,
    kind: &StrategyKind,
    budget: usize,
    shared: Option<&Permutation>,
    seed: u64,
) -> Result<TeamOutcome> {
    let fresh_tau;
    let tau = match kind {
        StrategyKind::ShuffledPointer(_) => Some(match shared {
            Some(t) => t,
            None => {
                fresh_tau = sample_permutation(placement.b(), derive_seed(seed, 1));
                &fresh_tau
            }
        }),
        _ => None,
    };

    let n = placement.n();
    let mut wins = Vec::with_capacity(n);
    let mut queries = Vec::with_capacity(n);
    let mut guess_wins = Vec::with_capacity(n);
    for player in 1..=n {
        let mut session = QuerySession::new(placement, colouring, player, budget)?;
        let mut rng = rng_from_seed(derive_seed(seed, 16 + player as u64));
        let play = match kind {
            StrategyKind::Naive(f) => naive_player(&mut session, *f, &mut rng)?,
            StrategyKind::Pointer(f) => pointer_player(&mut session, *f, &mut rng)?,
            StrategyKind::ShuffledPointer(f) => {
                shuffled_pointer_player(&mut session, tau, *f, &mut rng)?
            }
        };
        wins.push(play.found);
        queries.push(play.queries);
        guess_wins.push(!play.found && play.guess == Some(placement.slot(player)));
    }
    Ok(TeamOutcome::from_players(wins, queries, guess_wins))
}

/// One full game: the referee samples her state per the config and every
/// player plays in isolation. Deterministic given `seed`.
pub fn run_team_game(cfg: &GameConfig, kind: &StrategyKind, seed: u64) -> Result<TeamOutcome> {
    cfg.validate()?;
    if cfg.oracle == OracleKind::Colour {
        return Err(Error::Config(
            "classical strategies play the weak or strong oracle".into(),
        ));
    }
    if !kind.compatible_with(cfg.oracle) {
        return Err(Error::Config(format!(
            "strategy incompatible with {} oracle",
            cfg.oracle
        )));
    }
    let placement = match cfg.referee {
        RefereeMode::Uniform => sample_placement(cfg.n, cfg.b, derive_seed(seed, 0))?,
        RefereeMode::Cheating => {
            Placement::from_permutation(&cheating_permutation(cfg.n, derive_seed(seed, 0))?)
        }
    };
    let colouring = match cfg.variant {
        Variant::ColouredSlips => Some(sample_colouring(cfg.n, derive_seed(seed, 2))),
        _ => None,
    };
    play_team(&placement, colouring.as_ref(), kind, cfg.budget, None, seed)
}

/// The relaxed game from the strict-budget upper-bound proof: `N²` players
/// and lockers, rounds of one player opening `N` remaining lockers and
/// publicly revealing their contents. Found players and opened lockers leave
/// the game; the team wins iff `N` rounds all succeed. With uniform locker
/// choices the win probability is exactly `1/N!`.
pub fn sequential_reveal_game(n_rounds: usize, seed: u64) -> bool {
    assert!(n_rounds >= 1);
    let total = n_rounds * n_rounds;
    let sigma = sample_permutation(total, derive_seed(seed, 0));
    let placement = Placement::from_permutation(&sigma);
    let mut rng = rng_from_seed(derive_seed(seed, 1));

    let mut player_in = vec![true; total + 1];
    let mut lockers: Vec<usize> = (1..=total).collect();
    for _ in 0..n_rounds {
        // Lowest-numbered remaining player moves.
        let chooser = (1..=total).find(|&p| player_in[p]).expect("players remain");
        let picks = rand::seq::index::sample(&mut rng, lockers.len(), n_rounds).into_vec();
        let mut chosen: Vec<usize> = picks.iter().map(|&i| lockers[i]).collect();
        chosen.sort_unstable();
        let revealed: Vec<usize> = chosen
            .iter()
            .map(|&x| placement.occupant(x).expect("all lockers occupied"))
            .collect();
        if !revealed.contains(&chooser) {
            return false;
        }
        for &label in &revealed {
            player_in[label] = false;
        }
        lockers.retain(|x| !chosen.contains(x));
    }
    true
}

/// The sequential weak-oracle game: `2t` players and lockers, each player
/// asks the weak oracle about `t` uniformly chosen remaining lockers; on a
/// find his locker is removed, otherwise the team loses on the spot. The win
/// probability is exactly `t^t · t! / (2t)!`.
pub fn weak_sequential_game(t: usize, seed: u64) -> bool {
    assert!(t >= 1);
    let n = 2 * t;
    let sigma = sample_permutation(n, derive_seed(seed, 0));
    let mut rng = rng_from_seed(derive_seed(seed, 1));

    let mut lockers: Vec<usize> = (1..=n).collect();
    for player in 1..=n {
        let target = sigma.apply(player);
        let picks = t.min(lockers.len());
        let chosen = rand::seq::index::sample(&mut rng, lockers.len(), picks).into_vec();
        if !chosen.iter().any(|&i| lockers[i] == target) {
            return false;
        }
        lockers.retain(|&x| x != target);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::derive_seed;

    fn mc_team(cfg: &GameConfig, kind: &StrategyKind, trials: u64, master: u64) -> f64 {
        let wins = (0..trials)
            .filter(|&i| run_team_game(cfg, kind, derive_seed(master, i)).unwrap().team_win)
            .count();
        wins as f64 / trials as f64
    }

    fn standard_cfg(n: usize, budget: usize, oracle: OracleKind) -> GameConfig {
        GameConfig {
            n,
            b: n,
            budget,
            variant: Variant::Standard,
            oracle,
            referee: RefereeMode::Uniform,
            seed: 0,
        }
    }

    #[test]
    fn naive_full_budget_always_wins() {
        let cfg = standard_cfg(5, 5, OracleKind::Weak);
        for i in 0..200 {
            let out = run_team_game(&cfg, &StrategyKind::Naive(Fallback::None), i).unwrap();
            assert!(out.team_win);
        }
    }

    #[test]
    fn naive_individual_half() {
        // n = b = 2, budget 1: each player finds his label with probability 1/2.
        let placement_wins: u64 = (0..100_000u64)
            .map(|i| {
                let seed = derive_seed(21, i);
                let p = sample_placement(2, 2, derive_seed(seed, 0)).unwrap();
                let mut s = QuerySession::new(&p, None, 1, 1).unwrap();
                let mut rng = rng_from_seed(derive_seed(seed, 17));
                naive_player(&mut s, Fallback::None, &mut rng).unwrap().found as u64
            })
            .sum();
        let freq = placement_wins as f64 / 100_000.0;
        assert!((freq - 0.5).abs() < 0.01, "freq {freq}");
    }

    #[test]
    fn naive_team_one_sixteenth() {
        let cfg = standard_cfg(4, 2, OracleKind::Weak);
        let freq = mc_team(&cfg, &StrategyKind::Naive(Fallback::None), 100_000, 22);
        assert!((freq - 1.0 / 16.0).abs() < 0.005, "freq {freq}");
    }

    #[test]
    fn pointer_on_identity_wins_in_one() {
        let placement = Placement::from_permutation(&Permutation::identity(6));
        let out = play_team(
            &placement,
            None,
            &StrategyKind::Pointer(Fallback::None),
            3,
            None,
            0,
        )
        .unwrap();
        assert!(out.team_win);
        assert!(out.per_player_queries.iter().all(|&q| q == 1));
    }

    #[test]
    fn pointer_fails_on_long_cycle() {
        let placement =
            Placement::from_permutation(&Permutation::new(vec![2, 3, 4, 1]).unwrap());
        let out = play_team(
            &placement,
            None,
            &StrategyKind::Pointer(Fallback::None),
            2,
            None,
            0,
        )
        .unwrap();
        assert!(out.per_player_win.iter().all(|&w| !w));
    }

    #[test]
    fn pointer_two_players_exact_half() {
        // Both placements: identity wins, swap loses.
        let cfg = standard_cfg(2, 1, OracleKind::Strong);
        let id = Placement::from_permutation(&Permutation::identity(2));
        let swap = Placement::from_permutation(&Permutation::new(vec![2, 1]).unwrap());
        let kind = StrategyKind::Pointer(Fallback::None);
        assert!(play_team(&id, None, &kind, 1, None, 0).unwrap().team_win);
        assert!(!play_team(&swap, None, &kind, 1, None, 0).unwrap().team_win);
        let freq = mc_team(&cfg, &kind, 20_000, 23);
        assert!((freq - 0.5).abs() < 0.02, "freq {freq}");
    }

    #[test]
    fn pointer_errors_on_empty_locker() {
        let placement = Placement::new(3, vec![3, 1]).unwrap();
        // Player 2 opens locker 2, which is empty.
        let mut s = QuerySession::new(&placement, None, 2, 2).unwrap();
        let mut rng = rng_from_seed(0);
        let err = pointer_player(&mut s, Fallback::None, &mut rng).unwrap_err();
        assert!(matches!(err, Error::EmptyLockerEncountered { player: 2, locker: 2 }));
    }

    #[test]
    fn shuffled_with_identity_matches_pointer_transcript() {
        let placement =
            Placement::from_permutation(&Permutation::new(vec![3, 1, 4, 2]).unwrap());
        let tau = Permutation::identity(4);
        for player in 1..=4 {
            let mut a = QuerySession::new(&placement, None, player, 2).unwrap();
            let mut b = QuerySession::new(&placement, None, player, 2).unwrap();
            let mut rng_a = rng_from_seed(9);
            let mut rng_b = rng_from_seed(9);
            let pa = pointer_player(&mut a, Fallback::None, &mut rng_a).unwrap();
            let pb =
                shuffled_pointer_player(&mut b, Some(&tau), Fallback::None, &mut rng_b).unwrap();
            assert_eq!(a.transcript(), b.transcript());
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn shuffled_defeats_cheating_referee() {
        // Fresh uniform τ per trial uniformizes the planted permutation.
        let n = 20;
        let trials = 20_000u64;
        let expected = {
            // 1 − Σ_{k=1}^{10} 1/(10+k)
            1.0 - (11..=20).map(|d| 1.0 / d as f64).sum::<f64>()
        };
        let kind = StrategyKind::ShuffledPointer(Fallback::None);
        let wins = (0..trials)
            .filter(|&i| {
                let seed = derive_seed(24, i);
                let sigma = cheating_permutation(n, derive_seed(seed, 0)).unwrap();
                let placement = Placement::from_permutation(&sigma);
                play_team(&placement, None, &kind, n / 2, None, seed).unwrap().team_win
            })
            .count();
        let freq = wins as f64 / trials as f64;
        let sigma3 = 3.0 * (expected * (1.0 - expected) / trials as f64).sqrt();
        assert!((freq - expected).abs() < sigma3.max(0.01), "freq {freq} vs {expected}");
    }

    #[test]
    fn fixed_identity_tau_loses_to_cheating_referee() {
        let n = 20;
        let tau = Permutation::identity(n);
        let kind = StrategyKind::ShuffledPointer(Fallback::None);
        for i in 0..500u64 {
            let seed = derive_seed(25, i);
            let sigma = cheating_permutation(n, derive_seed(seed, 0)).unwrap();
            let placement = Placement::from_permutation(&sigma);
            let out = play_team(&placement, None, &kind, n / 2, Some(&tau), seed).unwrap();
            assert!(!out.team_win);
        }
    }

    #[test]
    fn cheating_guess_rate_is_about_two_over_n() {
        // The planted player who guesses uniformly among the n/2 unopened
        // lockers hits his own with probability 2/n.
        let n = 100;
        let trials = 40_000u64;
        let mut guess_wins = 0u64;
        for i in 0..trials {
            let seed = derive_seed(26, i);
            let (sigma, subset) = crate::oracle::cheating_permutation_detailed(n, derive_seed(seed, 0)).unwrap();
            let placement = Placement::from_permutation(&sigma);
            let player = subset[0];
            let mut s = QuerySession::new(&placement, None, player, n / 2).unwrap();
            let mut rng = rng_from_seed(derive_seed(seed, 16 + player as u64));
            let play = pointer_player(&mut s, Fallback::UniformUnopened, &mut rng).unwrap();
            assert!(!play.found);
            if play.guess == Some(placement.slot(player)) {
                guess_wins += 1;
            }
        }
        let freq = guess_wins as f64 / trials as f64;
        assert!((freq - 0.02).abs() < 0.005, "freq {freq}");
    }

    #[test]
    fn sequential_reveal_trivial_and_small() {
        assert!(sequential_reveal_game(1, 42));
        let trials = 100_000u64;
        for (n_rounds, expected) in [(2usize, 0.5f64), (3, 1.0 / 6.0)] {
            let wins = (0..trials)
                .filter(|&i| sequential_reveal_game(n_rounds, derive_seed(27, i)))
                .count();
            let freq = wins as f64 / trials as f64;
            let sigma3 = 3.0 * (expected * (1.0 - expected) / trials as f64).sqrt();
            assert!(
                (freq - expected).abs() < sigma3,
                "N={n_rounds}: freq {freq} vs {expected}"
            );
        }
    }

    #[test]
    fn weak_sequential_t1_matches_half() {
        let trials = 100_000u64;
        let wins = (0..trials)
            .filter(|&i| weak_sequential_game(1, derive_seed(28, i)))
            .count();
        let freq = wins as f64 / trials as f64;
        assert!((freq - 0.5).abs() < 0.01, "freq {freq}");
    }

    #[test]
    fn incompatible_strategy_oracle_pairs_rejected() {
        let cfg = standard_cfg(4, 2, OracleKind::Weak);
        let err = run_team_game(&cfg, &StrategyKind::Pointer(Fallback::None), 0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn outcome_query_counts_respect_budget() {
        let cfg = standard_cfg(8, 4, OracleKind::Strong);
        for i in 0..200 {
            let out = run_team_game(&cfg, &StrategyKind::Pointer(Fallback::None), i).unwrap();
            assert!(out.per_player_queries.iter().all(|&q| q <= 4));
        }
    }
}
