//! Game configuration and outcomes shared by the classical and quantum runs.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    EmptyLockers,
    ColouredSlips,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleKind {
    /// "Is my label in locker x?"
    Weak,
    /// "Which label is in locker x?"
    Strong,
    /// "Is my label in locker x, and is my slip red?"
    Colour,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RefereeMode {
    Uniform,
    Cheating,
}

macro_rules! impl_enum_str {
    ($ty:ty { $($variant:path => $name:literal),+ $(,)? }) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let s = match self { $($variant => $name),+ };
                write!(f, "{s}")
            }
        }
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok($variant),)+
                    other => Err(Error::Config(format!(
                        concat!("unknown ", stringify!($ty), " '{}'"), other
                    ))),
                }
            }
        }
    };
}

impl_enum_str!(Variant {
    Variant::Standard => "standard",
    Variant::EmptyLockers => "empty-lockers",
    Variant::ColouredSlips => "coloured-slips",
});

impl_enum_str!(OracleKind {
    OracleKind::Weak => "weak",
    OracleKind::Strong => "strong",
    OracleKind::Colour => "colour",
});

impl_enum_str!(RefereeMode {
    RefereeMode::Uniform => "uniform",
    RefereeMode::Cheating => "cheating",
});

/// One game's parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameConfig {
    pub n: usize,
    pub b: usize,
    pub budget: usize,
    pub variant: Variant,
    pub oracle: OracleKind,
    pub referee: RefereeMode,
    pub seed: u64,
}

impl GameConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if self.b < self.n {
            return Err(Error::Config(format!(
                "b = {} must be at least n = {}",
                self.b, self.n
            )));
        }
        if self.oracle == OracleKind::Colour && self.variant != Variant::ColouredSlips {
            return Err(Error::Config(
                "colour oracle requires the coloured-slips variant".into(),
            ));
        }
        if self.variant == Variant::Standard && self.b != self.n {
            return Err(Error::Config(
                "standard variant requires b = n (use empty-lockers for b > n)".into(),
            ));
        }
        if self.referee == RefereeMode::Cheating {
            if self.b != self.n {
                return Err(Error::Config(
                    "the cheating referee construction needs b = n".into(),
                ));
            }
            if self.n % 2 != 0 || self.n < 4 {
                return Err(Error::Config(
                    "the cheating referee construction needs even n >= 4".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Result of one full team game.
///
/// `per_player_win` records the game's winning condition per player: for
/// classical players, opening a locker that holds their own label; for
/// quantum players, announcing the correct locker (or colour). The separate
/// `per_player_guess_win` flag records whether the announced fallback guess
/// of a classical player who did not find his label happened to be correct;
/// it never contributes to `team_win`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeamOutcome {
    pub per_player_win: Vec<bool>,
    pub per_player_queries: Vec<usize>,
    pub per_player_guess_win: Vec<bool>,
    pub team_win: bool,
}

impl TeamOutcome {
    pub fn from_players(wins: Vec<bool>, queries: Vec<usize>, guess_wins: Vec<bool>) -> Self {
        let team_win = wins.iter().all(|&w| w);
        Self {
            per_player_win: wins,
            per_player_queries: queries,
            per_player_guess_win: guess_wins,
            team_win,
        }
    }

    pub fn total_queries(&self) -> usize {
        self.per_player_queries.iter().sum()
    }

    pub fn max_queries(&self) -> usize {
        self.per_player_queries.iter().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> GameConfig {
        GameConfig {
            n: 4,
            b: 4,
            budget: 2,
            variant: Variant::Standard,
            oracle: OracleKind::Strong,
            referee: RefereeMode::Uniform,
            seed: 0,
        }
    }

    #[test]
    fn valid_config_passes() {
        base().validate().unwrap();
    }

    #[test]
    fn colour_oracle_needs_coloured_variant() {
        let cfg = GameConfig {
            oracle: OracleKind::Colour,
            ..base()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn b_below_n_rejected() {
        let cfg = GameConfig { b: 3, ..base() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn cheating_needs_even_n() {
        let cfg = GameConfig {
            n: 5,
            b: 5,
            referee: RefereeMode::Cheating,
            ..base()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn team_win_is_conjunction() {
        let o = TeamOutcome::from_players(vec![true, false], vec![1, 1], vec![false, false]);
        assert!(!o.team_win);
        let o = TeamOutcome::from_players(vec![true, true], vec![1, 2], vec![false, true]);
        assert!(o.team_win);
        assert_eq!(o.total_queries(), 3);
        assert_eq!(o.max_queries(), 2);
    }

    #[test]
    fn enum_round_trip() {
        for v in ["standard", "empty-lockers", "coloured-slips"] {
            assert_eq!(v.parse::<Variant>().unwrap().to_string(), v);
        }
        for v in ["weak", "strong", "colour"] {
            assert_eq!(v.parse::<OracleKind>().unwrap().to_string(), v);
        }
        for v in ["uniform", "cheating"] {
            assert_eq!(v.parse::<RefereeMode>().unwrap().to_string(), v);
        }
        assert!("bogus".parse::<Variant>().is_err());
    }
}
