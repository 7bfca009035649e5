//! Dense statevector simulation of the quantum players.
//!
//! The search space is the locker range itself (dimension `b`, no
//! power-of-two padding): we simulate the query model, not a gate circuit.
//! One Grover iterate is a selective phase on the marked locker followed by
//! the generalized diffusion `I − (1 − e^{iψ}) |u⟩⟨u|` about the uniform
//! superposition `|u⟩`. Matching the two phases per the arcsin relation in
//! [`plan_exact_grover`] makes the final measurement hit the marked locker
//! with probability 1, not merely 1 − 1/b.

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use std::f64::consts::{FRAC_PI_2, PI};

use crate::game::{GameConfig, RefereeMode, TeamOutcome, Variant};
use crate::oracle::{cheating_permutation, colour_oracle, sample_colouring, sample_placement};
use crate::perm::{Colour, Colouring, Placement};
use crate::rng::{derive_seed, rng_from_seed};
use crate::{Error, Result};

/// Dense simulation cap: 16 bytes per amplitude.
pub const MAX_DENSE_DIM: usize = 1 << 20;

/// Norm drift allowed per operation.
pub const NORM_TOL: f64 = 1e-12;

/// End-to-end certainty tolerance after O(√b) iterates.
pub const CERTAINTY_TOL: f64 = 1e-9;

/// A normalized amplitude vector over lockers `1..=b`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<Complex64>,
}

impl StateVector {
    /// The uniform superposition over `b` lockers.
    pub fn uniform(b: usize) -> Result<Self> {
        if b < 1 {
            return Err(Error::Config("state dimension must be at least 1".into()));
        }
        if b > MAX_DENSE_DIM {
            return Err(Error::TooLarge {
                what: "statevector dimension",
                value: b,
                limit: MAX_DENSE_DIM,
            });
        }
        let amp = Complex64::new(1.0 / (b as f64).sqrt(), 0.0);
        Ok(Self {
            amps: vec![amp; b],
        })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Measurement probability of locker `x` (1-based).
    pub fn probability(&self, x: usize) -> f64 {
        self.amps[x - 1].norm_sqr()
    }

    /// One generalized Grover iterate: phase `φ` on the marked locker (no-op
    /// when there is none), then diffusion with phase `ψ`.
    pub fn grover_iterate(
        &mut self,
        marked: Option<usize>,
        oracle_phase: f64,
        diffusion_phase: f64,
    ) -> Result<()> {
        let b = self.dim();
        if let Some(m) = marked {
            if m < 1 || m > b {
                return Err(Error::IndexOutOfRange { index: m, bound: b });
            }
            self.amps[m - 1] *= Complex64::from_polar(1.0, oracle_phase);
        }
        // (I − (1 − e^{iψ}) |u⟩⟨u|) ψ  with  u_j = 1/√b
        let sum: Complex64 = self.amps.iter().sum();
        let correction =
            (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, diffusion_phase)) * sum
                / b as f64;
        for a in &mut self.amps {
            *a -= correction;
        }
        Ok(())
    }

    /// Sample a locker from the measurement distribution.
    pub fn measure(&self, rng: &mut ChaCha8Rng) -> usize {
        let r: f64 = rng.gen();
        let mut acc = 0.0;
        for (i, a) in self.amps.iter().enumerate() {
            acc += a.norm_sqr();
            if r < acc {
                return i + 1;
            }
        }
        self.amps.len()
    }
}

/// Iteration count and matched phases for search with certainty.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverPlan {
    pub b: usize,
    pub theta: f64,
    pub iterations: usize,
    pub oracle_phase: f64,
    pub diffusion_phase: f64,
}

/// Phase-matched exact search over `b` lockers with a single marked item.
///
/// With `θ = arcsin(1/√b)`, run `J = ⌈(π/2 − θ)/(2θ)⌉` iterates with both
/// phases set to `2·arcsin(sin(π/(4J+2))/sin θ)`; the slightly-too-long
/// rotation that standard Grover would overshoot is slowed exactly enough to
/// land on the marked axis. `J` never exceeds `⌈π/(4θ)⌉ + 1`, and `J = 0`
/// for `b = 1`.
pub fn plan_exact_grover(b: usize) -> Result<GroverPlan> {
    if b < 1 {
        return Err(Error::Config("search space must be at least 1".into()));
    }
    if b > MAX_DENSE_DIM {
        return Err(Error::TooLarge {
            what: "search space",
            value: b,
            limit: MAX_DENSE_DIM,
        });
    }
    let theta = (1.0 / (b as f64).sqrt()).asin();
    // Guard the ceil against float dust when the ratio is an exact integer.
    let raw = (FRAC_PI_2 - theta) / (2.0 * theta);
    let iterations = (raw - 1e-9).ceil().max(0.0) as usize;
    let phase = if iterations == 0 {
        PI
    } else {
        // J ≥ π/(4θ) − 1/2 keeps the ratio ≤ 1; clamp away float dust.
        let arg = ((PI / (4.0 * iterations as f64 + 2.0)).sin() / theta.sin()).min(1.0);
        2.0 * arg.asin()
    };
    Ok(GroverPlan {
        b,
        theta,
        iterations,
        oracle_phase: phase,
        diffusion_phase: phase,
    })
}

impl GroverPlan {
    /// Run the plan from the uniform state and return the final state.
    pub fn execute(&self, marked: Option<usize>) -> Result<StateVector> {
        let mut state = StateVector::uniform(self.b)?;
        for _ in 0..self.iterations {
            state.grover_iterate(marked, self.oracle_phase, self.diffusion_phase)?;
        }
        Ok(state)
    }
}

/// Exact Grover search: returns the measured locker and the queries spent.
/// With a marked locker present the measurement is the marked locker with
/// probability 1 (within [`CERTAINTY_TOL`]); with none, the state stays
/// uniform up to global phase and the guess is a uniform sample.
pub fn exact_grover_search(b: usize, marked: Option<usize>, seed: u64) -> Result<(usize, usize)> {
    let plan = plan_exact_grover(b)?;
    if let Some(m) = marked {
        if m < 1 || m > b {
            return Err(Error::IndexOutOfRange { index: m, bound: b });
        }
    }
    let state = plan.execute(marked)?;
    let mut rng = rng_from_seed(seed);
    Ok((state.measure(&mut rng), plan.iterations))
}

/// Success probability of plain Grover (`φ = ψ = π`) after `k` iterates:
/// the closed form `sin²((2k+1)·arcsin(1/√b))`, cross-checked against the
/// statevector on every call.
pub fn standard_grover_probability(b: usize, k: usize) -> Result<f64> {
    if b < 1 {
        return Err(Error::Config("search space must be at least 1".into()));
    }
    let theta = (1.0 / (b as f64).sqrt()).asin();
    let closed = ((2 * k + 1) as f64 * theta).sin().powi(2);

    let mut state = StateVector::uniform(b)?;
    for _ in 0..k {
        state.grover_iterate(Some(1), PI, PI)?;
    }
    let simulated = state.probability(1);
    assert!(
        (closed - simulated).abs() < 1e-10,
        "closed form {closed} vs statevector {simulated} at b={b}, k={k}"
    );
    Ok(closed)
}

/// The quantum player for the standard and empty-lockers games: exact search
/// with his slip's locker as the marked item.
pub fn quantum_locker_player(placement: &Placement, player: usize, seed: u64) -> Result<(usize, usize)> {
    if player < 1 || player > placement.n() {
        return Err(Error::Config(format!(
            "player {player} outside [1, {}]",
            placement.n()
        )));
    }
    exact_grover_search(placement.b(), Some(placement.slot(player)), seed)
}

/// The quantum player for the coloured-slips game. A red slip is the unique
/// marked item and exact search finds it; a blue slip leaves the oracle
/// identically zero and the search returns an arbitrary locker. Either way
/// one classical verification query on the returned locker settles the
/// colour, so the answer is always correct.
pub fn quantum_colour_player(
    placement: &Placement,
    colouring: &Colouring,
    player: usize,
    seed: u64,
) -> Result<(Colour, usize)> {
    if player < 1 || player > placement.n() {
        return Err(Error::Config(format!(
            "player {player} outside [1, {}]",
            placement.n()
        )));
    }
    let marked = match colouring.colour(player) {
        Colour::Red => Some(placement.slot(player)),
        Colour::Blue => None,
    };
    let (guess, queries) = exact_grover_search(placement.b(), marked, seed)?;
    let verified = colour_oracle(placement, colouring, player, guess);
    let answer = if verified { Colour::Red } else { Colour::Blue };
    Ok((answer, queries + 1))
}

/// Per-player and team query totals of the exact plan; the team total is
/// Θ(n√b), matching the order of the known lower bound.
pub fn total_query_census(n: usize, b: usize) -> Result<(usize, usize)> {
    if n < 1 || b < n {
        return Err(Error::Config(format!("need b >= n >= 1, got n={n}, b={b}")));
    }
    let per_player = plan_exact_grover(b)?.iterations;
    let team_total = n * per_player;
    if b >= 16 {
        let ratio = team_total as f64 / (n as f64 * (b as f64).sqrt());
        assert!(
            (0.5..=1.2).contains(&ratio),
            "query census ratio {ratio} out of range at n={n}, b={b}"
        );
    }
    Ok((per_player, team_total))
}

/// One full game played by quantum players. Team win means every player
/// announces his correct locker (or, in the coloured variant, his correct
/// colour).
pub fn run_quantum_team_game(cfg: &GameConfig, seed: u64) -> Result<TeamOutcome> {
    cfg.validate()?;
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
    run_quantum_team_on(&placement, colouring.as_ref(), seed)
}

/// As [`run_quantum_team_game`] but against a fixed referee state.
pub fn run_quantum_team_on(
    placement: &Placement,
    colouring: Option<&Colouring>,
    seed: u64,
) -> Result<TeamOutcome> {
    let n = placement.n();
    let mut wins = Vec::with_capacity(n);
    let mut queries = Vec::with_capacity(n);
    for player in 1..=n {
        let player_seed = derive_seed(seed, 16 + player as u64);
        let (win, q) = match colouring {
            Some(c) => {
                let (answer, q) = quantum_colour_player(placement, c, player, player_seed)?;
                (answer == c.colour(player), q)
            }
            None => {
                let (guess, q) = quantum_locker_player(placement, player, player_seed)?;
                (guess == placement.slot(player), q)
            }
        };
        wins.push(win);
        queries.push(q);
    }
    let guess_wins = vec![false; n];
    Ok(TeamOutcome::from_players(wins, queries, guess_wins))
}
