//! `aquiflow`: solve the fractional groundwater-flow problem from a flat
//! config file, or run one of the verification-style diagnostics.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 numeric
//! failure, 3 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use aquiflow_cli::config::{OutputFormat, RunConfig};
use aquiflow_cli::{output, parse_config, verify};
use aquiflow_core::{
    classical_solve, discrete_l2_norm, perturbation_experiment, picard_solve, run_simulation,
};

const EXIT_USAGE: u8 = 1;
const EXIT_NUMERIC: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "aquiflow",
    version,
    about = "Space-time fractional groundwater flow in a confined radial aquifer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the fractional solver and write the head field
    Solve {
        /// Path to a key = value config file
        #[arg(long)]
        config: PathBuf,
        /// Override the output path from the config
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the classical (alpha = 1) solver and report final norms
    Classical {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run the Picard fixed-point construction with a convergence report
    Picard {
        #[arg(long)]
        config: PathBuf,
        /// Iteration budget
        #[arg(long, default_value_t = 200)]
        max_iter: usize,
    },
    /// Run seeded perturbation experiments and report growth factors
    Stability {
        #[arg(long)]
        config: PathBuf,
        /// Number of random perturbation seeds
        #[arg(long, default_value_t = 20)]
        seeds: usize,
    },
    /// Run the full verification suite (criteria 1-9)
    Verify,
}

fn load_config(path: &PathBuf) -> Result<RunConfig, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read config {}: {e}", path.display());
        ExitCode::from(EXIT_USAGE)
    })?;
    parse_config(&text).map_err(|e| {
        eprintln!("{e}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn cmd_solve(config: &PathBuf, output_override: Option<PathBuf>) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let field = match run_simulation(&cfg.params(), &cfg.grid(), &cfg.order(), &cfg.initial_profile)
    {
        Ok(f) => f,
        Err(e) => {
            eprintln!("solver failed: {e}");
            return ExitCode::from(EXIT_NUMERIC);
        }
    };
    let path = output_override.unwrap_or_else(|| PathBuf::from(&cfg.output_path));
    let write = || -> std::io::Result<()> {
        let file = fs::File::create(&path)?;
        match cfg.output_format {
            OutputFormat::Csv => output::write_csv(file, &field)
                .map_err(|e| std::io::Error::other(e.to_string()))?,
            OutputFormat::Json => output::write_json(file, &field, &cfg)?,
        }
        Ok(())
    };
    if let Err(e) = write() {
        eprintln!("cannot write {}: {e}", path.display());
        return ExitCode::from(EXIT_USAGE);
    }
    let grid = cfg.grid();
    let final_level: Vec<f64> = (1..grid.n_cells())
        .map(|j| field.value(j, grid.n_steps()))
        .collect();
    println!(
        "solved alpha = {} on {} cells x {} steps; final-level norm {:.6e}; wrote {}",
        cfg.alpha,
        grid.n_cells(),
        grid.n_steps(),
        discrete_l2_norm(&final_level, grid.xi()),
        path.display()
    );
    ExitCode::SUCCESS
}

fn cmd_classical(config: &PathBuf) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    match classical_solve(&cfg.params(), &cfg.grid(), &cfg.initial_profile) {
        Ok(field) => {
            let grid = cfg.grid();
            let final_level: Vec<f64> = (1..grid.n_cells())
                .map(|j| field.value(j, grid.n_steps()))
                .collect();
            println!(
                "classical solve on {} cells x {} steps; final-level norm {:.6e}",
                grid.n_cells(),
                grid.n_steps(),
                discrete_l2_norm(&final_level, grid.xi())
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("classical solver failed: {e}");
            ExitCode::from(EXIT_NUMERIC)
        }
    }
}

fn cmd_picard(config: &PathBuf, max_iter: usize) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let report = match picard_solve(
        &cfg.params(),
        &cfg.grid(),
        &cfg.order(),
        &cfg.initial_profile,
        max_iter,
    ) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("picard iteration failed: {e}");
            return ExitCode::from(EXIT_NUMERIC);
        }
    };
    for (i, n) in report.step_norms.iter().enumerate() {
        println!("iteration {:3}: update norm {n:.6e}", i + 1);
    }
    if report.converged {
        println!("converged in {} iterations", report.iterations);
        ExitCode::SUCCESS
    } else {
        eprintln!("no convergence within {max_iter} iterations");
        ExitCode::from(EXIT_NUMERIC)
    }
}

fn cmd_stability(config: &PathBuf, seeds: usize) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let (params, grid, order) = (cfg.params(), cfg.grid(), cfg.order());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut all_ok = true;
    for s in 0..seeds {
        let seed: Vec<f64> = (1..grid.n_cells())
            .map(|_| 1e-3 * rng.random_range(-1.0..1.0))
            .collect();
        let trace =
            match perturbation_experiment(&params, &grid, &order, &cfg.initial_profile, &seed) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("perturbation experiment failed: {e}");
                    return ExitCode::from(EXIT_NUMERIC);
                }
            };
        let ok = trace.max_growth <= 1.0 + 1e-8;
        all_ok &= ok;
        println!(
            "seed {s:2}: max growth {:.12} {}",
            trace.max_growth,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    if all_ok {
        println!("all {seeds} perturbation traces bounded");
        ExitCode::SUCCESS
    } else {
        eprintln!("some perturbation traces grew beyond 1 + 1e-8");
        ExitCode::from(EXIT_VERIFY)
    }
}

fn cmd_verify() -> ExitCode {
    let results = verify::run_all();
    for r in &results {
        println!(
            "{} {:<26} {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.details
        );
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name).collect();
    if failed.is_empty() {
        println!("verification passed: {} checks", results.len());
        ExitCode::SUCCESS
    } else {
        println!(
            "{}",
            serde_json::json!({ "failed": failed, "passed": results.len() - failed.len() })
        );
        ExitCode::from(EXIT_VERIFY)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match cli.command {
        Command::Solve { config, output } => cmd_solve(&config, output),
        Command::Classical { config } => cmd_classical(&config),
        Command::Picard { config, max_iter } => cmd_picard(&config, max_iter),
        Command::Stability { config, seeds } => cmd_stability(&config, seeds),
        Command::Verify => cmd_verify(),
    }
}
