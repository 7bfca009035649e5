//! Referee-side state generation and the budget-enforced query oracles.
//!
//! The referee commits to a placement (and optionally a colouring) before
//! play. Each player then queries through his own [`QuerySession`], which
//! enforces the per-player budget and records a transcript. Quantum players
//! do not go through a session: superposition access is a different model,
//! and the quantum engine does its own query accounting.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::perm::{Colour, Colouring, Permutation, Placement};
use crate::rng::rng_from_seed;
use crate::{Error, Result};

/// Draw a uniform permutation of `{1..n}`.
pub fn sample_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = rng_from_seed(seed);
    let mut map: Vec<usize> = (1..=n).collect();
    map.shuffle(&mut rng);
    Permutation::new(map).expect("shuffle preserves bijectivity")
}

/// Draw a uniform injection of `n` labels into `b` lockers: the occupied
/// subset is uniform over all C(b,n) choices and the label assignment is
/// uniform over orderings.
pub fn sample_placement(n: usize, b: usize, seed: u64) -> Result<Placement> {
    if n < 1 || b < n {
        return Err(Error::InvalidPlacement(format!("need b >= n >= 1, got n={n}, b={b}")));
    }
    let mut rng = rng_from_seed(seed);
    let mut slots = rand::seq::index::sample(&mut rng, b, n).into_vec();
    slots.shuffle(&mut rng);
    for s in &mut slots {
        *s += 1;
    }
    Placement::new(b, slots)
}

/// Draw a uniform red/blue colouring of `n` slips.
pub fn sample_colouring(n: usize, seed: u64) -> Colouring {
    let mut rng = rng_from_seed(seed);
    let colours = (0..n)
        .map(|_| if rng.gen::<bool>() { Colour::Red } else { Colour::Blue })
        .collect();
    Colouring::new(colours).expect("n >= 1")
}

/// The cheating referee's permutation, together with the planted subset
/// `i_1, …, i_s` in order (`s = n/2 + 2`).
///
/// The construction maps `i_1 -> i_s` and `i_{j+1} -> i_j`, creating one
/// cycle of length exactly `s` through the chosen players, then fills the
/// remaining players over the remaining lockers uniformly. Pointer-following
/// players inside the planted cycle exhaust their `n/2` budget without
/// finding their label.
pub fn cheating_permutation_detailed(n: usize, seed: u64) -> Result<(Permutation, Vec<usize>)> {
    if n % 2 != 0 {
        return Err(Error::InvalidN { n, reason: "cheating construction needs even n" });
    }
    if n < 4 {
        return Err(Error::InvalidN { n, reason: "cheating construction needs n >= 4" });
    }
    let s = n / 2 + 2;
    let mut rng = rng_from_seed(seed);
    let mut subset = rand::seq::index::sample(&mut rng, n, s).into_vec();
    subset.shuffle(&mut rng);
    for v in &mut subset {
        *v += 1;
    }

    let mut map = vec![0usize; n];
    map[subset[0] - 1] = subset[s - 1];
    for j in 1..s {
        // σ(i_{j+1}) = i_j
        map[subset[j] - 1] = subset[j - 1];
    }

    let in_subset = {
        let mut flags = vec![false; n];
        for &v in &subset {
            flags[v - 1] = true;
        }
        flags
    };
    let rest: Vec<usize> = (1..=n).filter(|&v| !in_subset[v - 1]).collect();
    let mut images = rest.clone();
    images.shuffle(&mut rng);
    for (player, image) in rest.iter().zip(images) {
        map[player - 1] = image;
    }

    let perm = Permutation::new(map)?;
    Ok((perm, subset))
}

/// As [`cheating_permutation_detailed`] but hiding the planted subset.
pub fn cheating_permutation(n: usize, seed: u64) -> Result<Permutation> {
    cheating_permutation_detailed(n, seed).map(|(p, _)| p)
}

/// The coloured-slips oracle as a plain function: 1 iff locker `x` holds the
/// slip labelled `player` and that slip is red. Shared by the classical
/// session and the quantum player's verification call.
pub fn colour_oracle(placement: &Placement, colouring: &Colouring, player: usize, x: usize) -> bool {
    placement.occupant(x) == Some(player) && colouring.colour(player) == Colour::Red
}

/// Answer recorded in a session transcript.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Answer {
    Bit(bool),
    Label(Option<usize>),
}

/// One player's budget-enforced handle onto the referee's hidden state.
#[derive(Debug)]
pub struct QuerySession<'a> {
    placement: &'a Placement,
    colouring: Option<&'a Colouring>,
    player: usize,
    budget: usize,
    transcript: Vec<(usize, Answer)>,
}

impl<'a> QuerySession<'a> {
    pub fn new(
        placement: &'a Placement,
        colouring: Option<&'a Colouring>,
        player: usize,
        budget: usize,
    ) -> Result<Self> {
        if player < 1 || player > placement.n() {
            return Err(Error::Config(format!(
                "player {player} outside [1, {}]",
                placement.n()
            )));
        }
        Ok(Self {
            placement,
            colouring,
            player,
            budget,
            transcript: Vec::new(),
        })
    }

    pub fn player(&self) -> usize {
        self.player
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn used(&self) -> usize {
        self.transcript.len()
    }

    pub fn remaining(&self) -> usize {
        self.budget - self.used()
    }

    pub fn transcript(&self) -> &[(usize, Answer)] {
        &self.transcript
    }

    pub fn b(&self) -> usize {
        self.placement.b()
    }

    pub fn has_opened(&self, x: usize) -> bool {
        self.transcript.iter().any(|&(locker, _)| locker == x)
    }

    fn charge(&mut self, x: usize) -> Result<()> {
        if x < 1 || x > self.placement.b() {
            return Err(Error::IndexOutOfRange {
                index: x,
                bound: self.placement.b(),
            });
        }
        if self.used() >= self.budget {
            return Err(Error::BudgetExceeded { budget: self.budget });
        }
        Ok(())
    }

    /// Weak oracle: is my label in locker `x`?
    pub fn weak_query(&mut self, x: usize) -> Result<bool> {
        self.charge(x)?;
        let hit = self.placement.slot(self.player) == x;
        self.transcript.push((x, Answer::Bit(hit)));
        Ok(hit)
    }

    /// Strong oracle: which label (if any) is in locker `x`?
    pub fn strong_query(&mut self, x: usize) -> Result<Option<usize>> {
        self.charge(x)?;
        let label = self.placement.occupant(x);
        self.transcript.push((x, Answer::Label(label)));
        Ok(label)
    }

    /// Coloured-slips oracle: is my slip in locker `x` and red?
    pub fn colour_query(&mut self, x: usize) -> Result<bool> {
        let colouring = self
            .colouring
            .ok_or_else(|| Error::Config("colour query without a colouring".into()))?;
        self.charge(x)?;
        let hit = colour_oracle(self.placement, colouring, self.player, x);
        self.transcript.push((x, Answer::Bit(hit)));
        Ok(hit)
    }
}
