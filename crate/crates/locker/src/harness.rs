//! Reproducible experiment runner: batch simulation, closed-form reference
//! attachment, and CSV/JSON emission.
//!
//! Reports are a pure function of their configuration: per-trial seeds are
//! derived from the master seed and the trial index, so rerunning (or
//! extending the trial count) never changes earlier trials, and identical
//! configurations produce byte-identical files. No timestamps in the output
//! for the same reason.

use serde::{Deserialize, Serialize};

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use crate::analytics::{pointer_failure_exact, ratio_to_f64};
use crate::game::{GameConfig, OracleKind, RefereeMode, Variant};
use crate::quantum::run_quantum_team_game;
use crate::rng::derive_seed;
use crate::strategy::{run_team_game, Fallback, StrategyKind};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StrategyChoice {
    Naive,
    Pointer,
    ShuffledPointer,
    Quantum,
}

impl fmt::Display for StrategyChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StrategyChoice::Naive => "naive",
            StrategyChoice::Pointer => "pointer",
            StrategyChoice::ShuffledPointer => "shuffled-pointer",
            StrategyChoice::Quantum => "quantum",
        };
        write!(f, "{s}")
    }
}

impl FromStr for StrategyChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(StrategyChoice::Naive),
            "pointer" => Ok(StrategyChoice::Pointer),
            "shuffled-pointer" => Ok(StrategyChoice::ShuffledPointer),
            "quantum" => Ok(StrategyChoice::Quantum),
            other => Err(Error::Config(format!("unknown strategy '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputFormat::Csv => write!(f, "csv"),
            OutputFormat::Json => write!(f, "json"),
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown format '{other}'"))),
        }
    }
}

/// A batch of trials over one configuration, optionally swept over
/// parameter grids (cartesian product, in declaration order).
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub b: usize,
    pub budget: usize,
    pub variant: Variant,
    pub referee: RefereeMode,
    pub strategy: StrategyChoice,
    pub fallback: Fallback,
    pub trials: u64,
    pub master_seed: u64,
    pub sweep: Vec<(String, Vec<u64>)>,
}

impl ExperimentConfig {
    /// A standard-game configuration with the conventional `n/2` budget.
    pub fn standard(n: usize, strategy: StrategyChoice, trials: u64, master_seed: u64) -> Self {
        Self {
            n,
            b: n,
            budget: n / 2,
            variant: Variant::Standard,
            referee: RefereeMode::Uniform,
            strategy,
            fallback: Fallback::UniformUnopened,
            trials,
            master_seed,
            sweep: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        for (name, values) in &self.sweep {
            if !matches!(name.as_str(), "n" | "b" | "budget") {
                return Err(Error::Config(format!(
                    "sweep parameter '{name}' is not a game field (use n, b or budget)"
                )));
            }
            if values.is_empty() {
                return Err(Error::Config(format!("sweep over '{name}' has no values")));
            }
        }
        Ok(())
    }

    fn apply(&self, assignment: &[(String, u64)]) -> Self {
        let mut cfg = self.clone();
        cfg.sweep = Vec::new();
        for (name, value) in assignment {
            match name.as_str() {
                "n" => {
                    cfg.n = *value as usize;
                    // Derived defaults track the swept n: b when it equalled
                    // n, budget when it was the conventional n/2.
                    if self.b == self.n && !self.sweep.iter().any(|(k, _)| k == "b") {
                        cfg.b = cfg.n;
                    }
                    if self.budget == self.n / 2
                        && !self.sweep.iter().any(|(k, _)| k == "budget")
                    {
                        cfg.budget = cfg.n / 2;
                    }
                }
                "b" => cfg.b = *value as usize,
                "budget" => cfg.budget = *value as usize,
                _ => unreachable!("validated"),
            }
        }
        cfg
    }

    fn expand(&self) -> Vec<Self> {
        let mut assignments: Vec<Vec<(String, u64)>> = vec![Vec::new()];
        for (name, values) in &self.sweep {
            let mut next = Vec::new();
            for base in &assignments {
                for &v in values {
                    let mut a = base.clone();
                    a.push((name.clone(), v));
                    next.push(a);
                }
            }
            assignments = next;
        }
        assignments.iter().map(|a| self.apply(a)).collect()
    }

    fn game_config(&self) -> Result<GameConfig> {
        let oracle = match self.strategy {
            StrategyChoice::Naive => OracleKind::Weak,
            StrategyChoice::Pointer | StrategyChoice::ShuffledPointer => OracleKind::Strong,
            // The quantum engine does its own accounting; the field is
            // carried for the record.
            StrategyChoice::Quantum => {
                if self.variant == Variant::ColouredSlips {
                    OracleKind::Colour
                } else {
                    OracleKind::Weak
                }
            }
        };
        let cfg = GameConfig {
            n: self.n,
            b: self.b,
            budget: self.budget,
            variant: self.variant,
            oracle,
            referee: self.referee,
            seed: self.master_seed,
        };
        cfg.validate()?;
        if self.strategy != StrategyChoice::Quantum && self.variant == Variant::ColouredSlips {
            return Err(Error::Config(
                "classical colour-guessing strategies are not implemented".into(),
            ));
        }
        Ok(cfg)
    }

    fn strategy_kind(&self) -> Option<StrategyKind> {
        match self.strategy {
            StrategyChoice::Naive => Some(StrategyKind::Naive(self.fallback)),
            StrategyChoice::Pointer => Some(StrategyKind::Pointer(self.fallback)),
            StrategyChoice::ShuffledPointer => Some(StrategyKind::ShuffledPointer(self.fallback)),
            StrategyChoice::Quantum => None,
        }
    }
}

/// One trial of an (already expanded) configuration. Exposed so callers can
/// verify seed isolation: trial `i` is a function of the master seed and `i`
/// alone.
pub fn trial_outcome(cfg: &ExperimentConfig, trial: u64) -> Result<(bool, usize)> {
    let game = cfg.game_config()?;
    let seed = derive_seed(cfg.master_seed, trial);
    let outcome = match cfg.strategy_kind() {
        Some(kind) => run_team_game(&game, &kind, seed)?,
        None => run_quantum_team_game(&game, seed)?,
    };
    Ok((outcome.team_win, outcome.total_queries()))
}

/// The closed form this configuration reproduces, when there is one.
pub fn reference_value(cfg: &ExperimentConfig) -> Option<f64> {
    match cfg.strategy {
        StrategyChoice::Quantum => Some(1.0),
        StrategyChoice::Naive => {
            if cfg.variant == Variant::Standard
                && cfg.referee == RefereeMode::Uniform
                && cfg.b == cfg.n
            {
                // Independent uniform choices cover any fixed locker with
                // probability budget/n.
                Some((cfg.budget as f64 / cfg.n as f64).powi(cfg.n as i32))
            } else {
                None
            }
        }
        StrategyChoice::Pointer | StrategyChoice::ShuffledPointer => {
            let uniformized = cfg.referee == RefereeMode::Uniform
                || cfg.strategy == StrategyChoice::ShuffledPointer;
            if uniformized && cfg.variant == Variant::Standard && cfg.b == cfg.n && cfg.n % 2 == 0 {
                let failure = pointer_failure_exact(cfg.n).ok()?;
                let success = 1.0 - ratio_to_f64(&failure);
                // The closed form is for the full n/2 budget.
                (cfg.budget == cfg.n / 2).then_some(success)
            } else {
                None
            }
        }
    }
}

/// One row of an experiment report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub variant: String,
    pub strategy: String,
    pub n: usize,
    pub b: usize,
    pub budget: usize,
    pub referee: String,
    pub trials: u64,
    pub wins: u64,
    pub frequency: f64,
    pub stderr: f64,
    pub reference: Option<f64>,
    pub pass: Option<bool>,
    pub mean_queries: f64,
    pub master_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ExperimentReport {
    pub rows: Vec<ReportRow>,
}

/// Round to 12 significant digits; the serialization precision of reports.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float")
}

/// Run all trials for a configuration (expanding any sweep) and assemble the
/// report in parameter order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for expanded in cfg.expand() {
        // Fail fast on configuration problems before burning trials.
        expanded.game_config()?;
        let mut wins = 0u64;
        let mut queries = 0u64;
        for trial in 0..expanded.trials {
            let (win, q) = trial_outcome(&expanded, trial)?;
            wins += win as u64;
            queries += q as u64;
        }
        let trials = expanded.trials;
        let frequency = wins as f64 / trials as f64;
        let stderr = (frequency * (1.0 - frequency) / trials as f64).sqrt();
        let reference = reference_value(&expanded);
        let pass = reference.map(|r| (frequency - r).abs() <= 3.0 * stderr.max(f64::EPSILON));
        let mean_queries = queries as f64 / (trials as f64 * expanded.n as f64);
        rows.push(ReportRow {
            variant: expanded.variant.to_string(),
            strategy: expanded.strategy.to_string(),
            n: expanded.n,
            b: expanded.b,
            budget: expanded.budget,
            referee: expanded.referee.to_string(),
            trials,
            wins,
            frequency: round_sig(frequency),
            stderr: round_sig(stderr),
            reference: reference.map(round_sig),
            pass,
            mean_queries: round_sig(mean_queries),
            master_seed: expanded.master_seed,
        });
    }
    Ok(ExperimentReport { rows })
}

pub const CSV_HEADER: &str =
    "variant,strategy,n,b,budget,referee,trials,wins,frequency,stderr,reference,pass,mean_queries,master_seed";

pub fn to_csv(report: &ExperimentReport) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &report.rows {
        let reference = r.reference.map(|v| v.to_string()).unwrap_or_default();
        let pass = r.pass.map(|v| v.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            r.variant,
            r.strategy,
            r.n,
            r.b,
            r.budget,
            r.referee,
            r.trials,
            r.wins,
            r.frequency,
            r.stderr,
            reference,
            pass,
            r.mean_queries,
            r.master_seed
        ));
    }
    out
}

pub fn to_json(report: &ExperimentReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(report)?)
}

/// Write the report to `path` in the requested format.
pub fn emit_report(report: &ExperimentReport, path: &Path, format: OutputFormat) -> Result<()> {
    let body = match format {
        OutputFormat::Csv => to_csv(report),
        OutputFormat::Json => to_json(report)?,
    };
    let mut file = std::fs::File::create(path)?;
    file.write_all(body.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_header_only() {
        let csv = to_csv(&ExperimentReport::default());
        assert_eq!(csv, format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn json_round_trip() {
        let cfg = ExperimentConfig::standard(4, StrategyChoice::Pointer, 500, 7);
        let report = run_experiment(&cfg).unwrap();
        let json = to_json(&report).unwrap();
        let back: ExperimentReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn identical_configs_give_identical_csv() {
        let cfg = ExperimentConfig::standard(6, StrategyChoice::Pointer, 300, 11);
        let a = to_csv(&run_experiment(&cfg).unwrap());
        let b = to_csv(&run_experiment(&cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn seed_isolation_under_trial_extension() {
        let mut cfg = ExperimentConfig::standard(6, StrategyChoice::Pointer, 100, 13);
        let first: Vec<bool> = (0..100)
            .map(|i| trial_outcome(&cfg, i).unwrap().0)
            .collect();
        cfg.trials = 150;
        let extended: Vec<bool> = (0..100)
            .map(|i| trial_outcome(&cfg, i).unwrap().0)
            .collect();
        assert_eq!(first, extended);
    }

    #[test]
    fn sweep_expands_in_parameter_order() {
        let mut cfg = ExperimentConfig::standard(4, StrategyChoice::Quantum, 5, 3);
        cfg.sweep = vec![("n".into(), vec![4, 16, 64])];
        let report = run_experiment(&cfg).unwrap();
        let ns: Vec<usize> = report.rows.iter().map(|r| r.n).collect();
        assert_eq!(ns, vec![4, 16, 64]);
        for r in &report.rows {
            assert_eq!(r.b, r.n);
            assert_eq!(r.frequency, 1.0);
        }
    }

    #[test]
    fn pointer_reference_attached_and_passing() {
        let cfg = ExperimentConfig::standard(10, StrategyChoice::Pointer, 20_000, 17);
        let report = run_experiment(&cfg).unwrap();
        let row = &report.rows[0];
        let expected = 1.0 - crate::analytics::ratio_to_f64(&pointer_failure_exact(10).unwrap());
        assert!((row.reference.unwrap() - expected).abs() < 1e-9);
        assert_eq!(row.pass, Some(true), "frequency {}", row.frequency);
    }

    #[test]
    fn quantum_reference_is_certainty() {
        let cfg = ExperimentConfig::standard(8, StrategyChoice::Quantum, 50, 19);
        let report = run_experiment(&cfg).unwrap();
        let row = &report.rows[0];
        assert_eq!(row.frequency, 1.0);
        assert_eq!(row.reference, Some(1.0));
        assert_eq!(row.pass, Some(true));
    }

    #[test]
    fn invalid_sweep_parameter_rejected() {
        let mut cfg = ExperimentConfig::standard(4, StrategyChoice::Pointer, 5, 0);
        cfg.sweep = vec![("frobnicate".into(), vec![1])];
        assert!(matches!(run_experiment(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn round_sig_keeps_twelve_digits() {
        assert_eq!(round_sig(0.0), 0.0);
        assert_eq!(round_sig(1.0 / 3.0), 0.333333333333);
        assert_eq!(round_sig(123456789.0), 123456789.0);
    }
}
