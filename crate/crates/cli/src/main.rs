//! `cliff`: command-line front end for the Clifford-algebra engine.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cliffor_cli::commands::{binor_cmd, dirac_cmd, eval_cmd, hierarchy_cmd, rep_cmd, CliError};
use cliffor_cli::config::FileConfig;
use cliffor_cli::report::ErrorReport;
use cliffor_cli::Format;

#[derive(Debug, Parser)]
#[command(
    name = "cliff",
    version,
    about = "Clifford-algebra engine: binor logic, the iterated algebra tower, matrix representations, and a finite Dirac toy model"
)]
struct Cli {
    /// JSON config file; flags take precedence over its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format (csv applies to rep matrices and dirac spectra only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and evaluate a Clifford expression.
    Eval(eval_cmd::EvalArgs),
    /// GF(2) logic operations on binors and boolean reference functions.
    Binor(binor_cmd::BinorArgs),
    /// The iterated-algebra signature chain and convention search.
    Hierarchy(hierarchy_cmd::HierarchyArgs),
    /// Tensor-chain generator matrices with verification residuals.
    Rep(rep_cmd::RepArgs),
    /// The finite Dirac toy model reports.
    Dirac(dirac_cmd::DiracArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let file_config = match &cli.config {
        Some(path) => match FileConfig::load(path) {
            Ok(cfg) => cfg,
            Err(message) => {
                ErrorReport::print("config", &message);
                return ExitCode::from(2);
            }
        },
        None => FileConfig::default(),
    };

    let outcome = match &cli.command {
        Command::Eval(args) => eval_cmd::run(args, &file_config, cli.format),
        Command::Binor(args) => binor_cmd::run(args, &file_config, cli.format),
        Command::Hierarchy(args) => hierarchy_cmd::run(args, &file_config, cli.format),
        Command::Rep(args) => rep_cmd::run(args, &file_config, cli.format),
        Command::Dirac(args) => dirac_cmd::run(args, &file_config, cli.format),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain {
            kind,
            message,
            detail,
        }) => {
            match detail {
                Some(detail) => ErrorReport::print_with_detail(&kind, message, detail),
                None => ErrorReport::print(&kind, message),
            }
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            ErrorReport::print("usage", &message);
            ExitCode::from(2)
        }
    }
}
