//! Batch experiment runner for the locker puzzle.
//!
//! Thin shell over the library: `simulate` and `sweep` drive the Monte
//! Carlo harness, `exact` prints closed forms and brute-force enumerations,
//! `quantum` runs statevector searches, and `verify` runs the full
//! acceptance suite.
//!
//! Exit codes: 0 success, 1 configuration error, 2 verification failure,
//! 3 I/O error.

use clap::{Args, Parser, Subcommand};

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use locker_puzzle::analytics;
use locker_puzzle::game::{RefereeMode, Variant};
use locker_puzzle::harness::{
    emit_report, run_experiment, to_csv, to_json, ExperimentConfig, OutputFormat,
    StrategyChoice,
};
use locker_puzzle::quantum;
use locker_puzzle::strategy::Fallback;
use locker_puzzle::Error;

#[derive(Parser)]
#[command(name = "locker", about = "Locker puzzle simulations and analytics", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monte Carlo simulation of one configuration
    Simulate(SimArgs),
    /// Monte Carlo over a parameter grid (requires --sweep)
    Sweep(SimArgs),
    /// Closed-form values and brute-force enumeration
    Exact(ExactArgs),
    /// Statevector quantum runs
    Quantum(QuantumArgs),
    /// Run the full acceptance suite
    Verify,
}

#[derive(Args, Clone)]
struct SimArgs {
    /// Flat key=value config file; flags given on the command line win
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    /// Locker count (defaults to n)
    #[arg(long)]
    b: Option<usize>,
    /// Per-player query budget (defaults to n/2)
    #[arg(long)]
    budget: Option<usize>,
    /// naive | pointer | shuffled-pointer | quantum
    #[arg(long)]
    strategy: Option<String>,
    /// standard | empty-lockers | coloured-slips
    #[arg(long)]
    variant: Option<String>,
    /// uniform | cheating
    #[arg(long)]
    referee: Option<String>,
    /// none | uniform-unopened | last-seen-pointer
    #[arg(long)]
    fallback: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// Parameter grid, e.g. --sweep "n=4,16,64" (repeatable)
    #[arg(long)]
    sweep: Vec<String>,
}

#[derive(Args)]
struct ExactArgs {
    /// pointer-failure | limit | sqrt-budget | weak-seq | stirling |
    /// grover-budget | brute-force
    #[arg(long)]
    formula: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Args)]
struct QuantumArgs {
    /// Search-space size
    #[arg(long)]
    b: usize,
    /// Marked locker (omit for the no-solution case)
    #[arg(long)]
    marked: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Repeat count
    #[arg(long, default_value_t = 1)]
    trials: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate(args) => simulate(args, false),
        Command::Sweep(args) => simulate(args, true),
        Command::Exact(args) => exact(args),
        Command::Quantum(args) => quantum_run(args),
        Command::Verify => return verify(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn read_config_file(path: &PathBuf) -> Result<HashMap<String, String>, Error> {
    let body = std::fs::read_to_string(path)?;
    let mut map = HashMap::new();
    for (lineno, line) in body.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("{}:{}: expected key=value", path.display(), lineno + 1))
        })?;
        map.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(map)
}

fn merged<'a>(flag: &'a Option<String>, file: &'a HashMap<String, String>, key: &str) -> Option<&'a str> {
    flag.as_deref().or_else(|| file.get(key).map(String::as_str))
}

fn parse_sweep(spec: &str) -> Result<(String, Vec<u64>), Error> {
    let (name, values) = spec
        .split_once('=')
        .ok_or_else(|| Error::Config(format!("sweep '{spec}' is not name=v1,v2,...")))?;
    let values = values
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<u64>()
                .map_err(|_| Error::Config(format!("sweep value '{v}' is not a number")))
        })
        .collect::<Result<Vec<u64>, Error>>()?;
    Ok((name.trim().to_string(), values))
}

fn build_config(args: &SimArgs, need_sweep: bool) -> Result<ExperimentConfig, Error> {
    let file = match &args.config {
        Some(path) => read_config_file(path)?,
        None => HashMap::new(),
    };
    let get_num = |flag: &Option<usize>, key: &str| -> Result<Option<usize>, Error> {
        if flag.is_some() {
            return Ok(*flag);
        }
        match file.get(key) {
            Some(v) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| Error::Config(format!("field '{key}': '{v}' is not a number"))),
            None => Ok(None),
        }
    };

    let n = get_num(&args.n, "n")?
        .ok_or_else(|| Error::Config("field 'n' is required".into()))?;
    let b = get_num(&args.b, "b")?.unwrap_or(n);
    let budget = get_num(&args.budget, "budget")?.unwrap_or(n / 2);
    let strategy: StrategyChoice = merged(&args.strategy, &file, "strategy")
        .unwrap_or("pointer")
        .parse()?;
    let variant: Variant = merged(&args.variant, &file, "variant")
        .unwrap_or("standard")
        .parse()?;
    let referee: RefereeMode = merged(&args.referee, &file, "referee")
        .unwrap_or("uniform")
        .parse()?;
    let fallback: Fallback = merged(&args.fallback, &file, "fallback")
        .unwrap_or("uniform-unopened")
        .parse()?;
    let trials = match args.trials {
        Some(t) => t,
        None => match file.get("trials") {
            Some(v) => v
                .parse()
                .map_err(|_| Error::Config(format!("field 'trials': '{v}' is not a number")))?,
            None => 10_000,
        },
    };
    let master_seed = match args.seed {
        Some(s) => s,
        None => match file.get("seed") {
            Some(v) => v
                .parse()
                .map_err(|_| Error::Config(format!("field 'seed': '{v}' is not a number")))?,
            None => 0,
        },
    };

    let mut sweep = Vec::new();
    if args.sweep.is_empty() {
        if let Some(spec) = file.get("sweep") {
            sweep.push(parse_sweep(spec)?);
        }
    } else {
        for spec in &args.sweep {
            sweep.push(parse_sweep(spec)?);
        }
    }
    if need_sweep && sweep.is_empty() {
        return Err(Error::Config("the sweep subcommand requires --sweep".into()));
    }

    Ok(ExperimentConfig {
        n,
        b,
        budget,
        variant,
        referee,
        strategy,
        fallback,
        trials,
        master_seed,
        sweep,
    })
}

fn simulate(args: SimArgs, need_sweep: bool) -> Result<(), Error> {
    let format: OutputFormat = {
        let file = match &args.config {
            Some(path) => read_config_file(path)?,
            None => HashMap::new(),
        };
        merged(&args.format, &file, "format").unwrap_or("csv").parse()?
    };
    let cfg = build_config(&args, need_sweep)?;
    let report = run_experiment(&cfg)?;
    match &args.out {
        Some(path) => emit_report(&report, path, format)?,
        None => {
            let body = match format {
                OutputFormat::Csv => to_csv(&report),
                OutputFormat::Json => to_json(&report)?,
            };
            print!("{body}");
        }
    }
    Ok(())
}

fn exact(args: ExactArgs) -> Result<(), Error> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::Config(format!("formula '{}' needs --{name}", args.formula)))
    };
    match args.formula.as_str() {
        "pointer-failure" => {
            let n = need(args.n, "n")?;
            let failure = analytics::pointer_failure_exact(n)?;
            println!(
                "pointer failure at n={n}: {failure} = {:.12}",
                analytics::ratio_to_f64(&failure)
            );
            println!("team success: {:.12}", 1.0 - analytics::ratio_to_f64(&failure));
        }
        "limit" => {
            println!("limiting success probability 1 - ln 2 = {:.12}", analytics::pointer_success_limit());
        }
        "sqrt-budget" => {
            let n = need(args.n, "n")?;
            let bound = analytics::sqrt_budget_bound(n)?;
            println!(
                "sqrt-budget bound at n={n}: {bound} = {:.3e}",
                analytics::ratio_to_f64(&bound)
            );
        }
        "weak-seq" => {
            let t = need(args.t, "t")?;
            let exact = analytics::weak_sequential_exact(t)?;
            println!(
                "weak sequential win probability at t={t}: {exact} = {:.12}",
                analytics::ratio_to_f64(&exact)
            );
        }
        "stirling" => {
            let t = need(args.t, "t")?;
            let approx = analytics::weak_sequential_stirling(t);
            let exact = analytics::weak_sequential_exact(t)?;
            println!(
                "Stirling approximation at t={t}: {approx:.6e} (exact {:.6e}, rel err {:.4})",
                analytics::ratio_to_f64(&exact),
                analytics::relative_error(approx, &exact)
            );
        }
        "grover-budget" => {
            let b = need(args.b, "b")?;
            println!("quantum query budget at b={b}: {}", analytics::grover_query_budget(b)?);
        }
        "brute-force" => {
            let n = need(args.n, "n")?;
            let budget = args.budget.unwrap_or(n / 2);
            let p = analytics::brute_force_team_success(
                n,
                budget,
                &locker_puzzle::strategy::StrategyKind::Pointer(Fallback::None),
            )?;
            println!(
                "pointer team success by enumeration, n={n}, budget {budget}: {p} = {:.12}",
                analytics::ratio_to_f64(&p)
            );
        }
        other => {
            return Err(Error::Config(format!("unknown formula '{other}'")));
        }
    }
    Ok(())
}

fn quantum_run(args: QuantumArgs) -> Result<(), Error> {
    let plan = quantum::plan_exact_grover(args.b)?;
    println!(
        "plan: b={}, J={}, phases {:.6} rad",
        plan.b, plan.iterations, plan.oracle_phase
    );
    for trial in 0..args.trials {
        let seed = locker_puzzle::rng::derive_seed(args.seed, trial);
        let (guess, queries) = quantum::exact_grover_search(args.b, args.marked, seed)?;
        match args.marked {
            Some(m) => println!(
                "trial {trial}: measured locker {guess} ({}) in {queries} queries",
                if guess == m { "marked" } else { "MISS" }
            ),
            None => println!("trial {trial}: no marked locker, measured {guess} in {queries} queries"),
        }
    }
    Ok(())
}

fn verify() -> ExitCode {
    let results = locker_puzzle::acceptance::run_all();
    let mut all_pass = true;
    for r in &results {
        println!("{}", r.line());
        all_pass &= r.pass;
    }
    if all_pass {
        println!("all {} criteria passed", results.len());
        ExitCode::SUCCESS
    } else {
        eprintln!("verification failed");
        ExitCode::from(2)
    }
}
