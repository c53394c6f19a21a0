use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use modsym::properties::run_properties;
use modsym::scenario::{
    default_workers, parse_grid, run_grid, run_scenario, write_csv, ScenarioArgs, ScenarioConfig,
};

#[derive(Parser)]
#[command(name = "modsym", version, about = "Generation checks for modular-symbol eigenspaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a CSV mirror.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Exit nonzero when a scenario with a case label fails its claim.
    #[arg(long = "assert")]
    assert_claims: bool,
    /// Zero the timings so reports are byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario.
    Verify {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Run every scenario of a grid file.
    Grid {
        #[arg(long)]
        config: PathBuf,
        /// Worker threads; defaults to MODSYM_WORKERS or the CPU count.
        #[arg(long, env = "MODSYM_WORKERS")]
        workers: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Run the seeded property suites.
    Properties {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exercised cases per suite.
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(json: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, format!("{json}\n")).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn write_csv_file(path: &PathBuf, reports: &[&modsym::scenario::GenerationReport]) -> Result<(), String> {
    let file = fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
    write_csv(file, reports).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.command {
        Command::Verify { scenario, output } => {
            let config = ScenarioConfig::try_from(&scenario).map_err(|e| e.to_string())?;
            let mut report = run_scenario(&config).map_err(|e| e.to_string())?;
            if output.no_timing {
                report = report.canonical();
            }
            emit(&report.to_json(), &output.out)?;
            if let Some(path) = &output.csv {
                write_csv_file(path, &[&report])?;
            }
            Ok(!output.assert_claims || report.claim_holds())
        }
        Command::Grid { config, workers, output } => {
            let text = fs::read_to_string(&config).map_err(|e| format!("{}: {e}", config.display()))?;
            let configs = parse_grid(&text).map_err(|e| e.to_string())?;
            let mut outcome = run_grid(&configs, workers.unwrap_or_else(default_workers));
            if output.no_timing {
                outcome = outcome.canonical();
            }
            emit(&outcome.to_json(), &output.out)?;
            if let Some(path) = &output.csv {
                let reports: Vec<_> = outcome.reports.iter().filter_map(|r| r.report.as_ref()).collect();
                write_csv_file(path, &reports)?;
            }
            for row in &outcome.reports {
                if let Some(err) = &row.error {
                    eprintln!("error: {}: {err}", row.scenario);
                }
            }
            let s = &outcome.summary;
            eprintln!(
                "{} scenarios, {} errors, {} failed claims",
                s.scenarios,
                s.errors,
                s.failed_claims.len()
            );
            for (case, counts) in &s.by_case {
                eprintln!("  {case}: {} equal, {} unequal", counts.equal, counts.unequal);
            }
            Ok(!output.assert_claims || (s.failed_claims.is_empty() && s.errors == 0))
        }
        Command::Properties { seed, cases, out } => {
            let report = run_properties(seed, cases);
            emit(&report.to_json(), &out)?;
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
