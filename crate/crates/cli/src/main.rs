use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symred_cli::{list_scenarios, run, RunConfig, EXIT_CONFIG};

#[derive(Parser)]
#[command(name = "symred", version, about = "Run exact symplectic reduction check suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the scenarios listed in a JSON config.
    Run {
        config: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        sample_count: Option<u64>,
        #[arg(long)]
        parallel: bool,
    },
    /// Print the registered scenarios and their parameters.
    ListScenarios,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::ListScenarios => {
            print!("{}", list_scenarios());
            ExitCode::SUCCESS
        }
        Command::Run {
            config,
            report,
            seed,
            sample_count,
            parallel,
        } => {
            let mut cfg = match RunConfig::from_path(&config.to_string_lossy()) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("config error: {e}");
                    return ExitCode::from(EXIT_CONFIG as u8);
                }
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(k) = sample_count {
                cfg.sample_count = k as usize;
            }
            cfg.parallel |= parallel;
            let out = run(&cfg);
            let json = out.to_json();
            match report.or_else(|| cfg.output_path.as_ref().map(PathBuf::from)) {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, json + "\n") {
                        eprintln!("cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_CONFIG as u8);
                    }
                    print!("{}", out.human_summary());
                }
                None => {
                    eprint!("{}", out.human_summary());
                    println!("{json}");
                }
            }
            ExitCode::from(out.exit_code() as u8)
        }
    }
}
