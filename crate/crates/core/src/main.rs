use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use kepes::config::{parse_config_with, ConfigError};
use kepes::presets;
use kepes::run::{run, RunError};

#[derive(Parser)]
#[command(
    name = "kepes",
    version,
    about = "1-D finite volume solver with kinetic-energy-preserving, entropy-stable fluxes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a problem from a config file (or a bare preset) and write its output.
    Run {
        /// Config file; keys not set fall back to the file's preset.
        config: Option<PathBuf>,
        /// Start from this preset instead of reading a file.
        #[arg(long, conflicts_with = "config")]
        preset: Option<String>,
        #[arg(long)]
        output_dir: Option<PathBuf>,
        /// Extra `key=value` settings applied after the file.
        #[arg(long = "override", visible_alias = "set", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
    },
    /// List the presets, or print one as a config file.
    Preset {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn config_error(e: ConfigError) -> ExitCode {
    fail(2, e)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Preset { name, list } => {
            if list || name.is_none() {
                for n in presets::NAMES {
                    println!("{n:20} {}", presets::describe(n));
                }
                return ExitCode::SUCCESS;
            }
            match presets::preset(name.as_deref().unwrap_or_default()) {
                Ok(cfg) => {
                    print!("{}", cfg.to_config_text());
                    ExitCode::SUCCESS
                }
                Err(e) => config_error(e),
            }
        }
        Command::Run { config, preset, output_dir, mut overrides } => {
            let text = match (&config, &preset) {
                (Some(path), _) => match std::fs::read_to_string(path) {
                    Ok(t) => t,
                    Err(e) => return fail(3, format!("cannot read {}: {e}", path.display())),
                },
                (None, Some(p)) => format!("preset = {p}\n"),
                (None, None) => return fail(2, "give a config file or --preset"),
            };
            if let Some(dir) = output_dir {
                overrides.push(format!("output_dir={}", dir.display()));
            }
            let cfg = match parse_config_with(&text, &overrides) {
                Ok(c) => c,
                Err(e) => return config_error(e),
            };
            match run(&cfg) {
                Ok(s) => {
                    let c = s.conservation_errors;
                    println!("{}: {} steps to t = {}", cfg.preset, s.steps, s.final_time);
                    println!("conservation errors: {:.3e} {:.3e} {:.3e}", c[0], c[1], c[2]);
                    println!("output written to {}", cfg.output.dir.display());
                    ExitCode::SUCCESS
                }
                Err(RunError::Config(e)) => config_error(e),
                Err(e @ RunError::Solver(_)) => fail(1, e),
                Err(e) => fail(3, e),
            }
        }
    }
}
