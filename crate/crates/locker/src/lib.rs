//! The locker puzzle, end to end: a team of `n` players must each locate
//! their own label among `n` lockers under a query budget. This crate
//! implements the classical strategies (naive, pointer-following, and the
//! shared-randomness defense), the referee's oracles including an
//! adversarial one, exact closed-form analytics with a brute-force
//! enumeration oracle, and a dense-statevector quantum engine whose
//! phase-matched Grover search wins the game with probability 1.
//!
//! Start with the runnable programs under `examples/`, one per capability,
//! or the `locker` binary for batch experiments.

pub mod acceptance;
pub mod analytics;
pub mod error;
pub mod game;
pub mod harness;
pub mod oracle;
pub mod perm;
pub mod quantum;
pub mod rng;
pub mod strategy;

pub use error::Error;
pub use game::{GameConfig, OracleKind, RefereeMode, TeamOutcome, Variant};
pub use perm::{Colour, Colouring, Permutation, Placement};

pub type Result<T> = std::result::Result<T, Error>;
