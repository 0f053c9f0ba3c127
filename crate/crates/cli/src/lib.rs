//! Library surface of the `cliff` command-line tool: the expression parser,
//! runtime-ring dispatch, subcommand implementations and report envelope.

pub mod commands;
pub mod config;
pub mod dynmv;
pub mod expr;
pub mod report;

/// Output format (csv applies to rep matrices and dirac spectra only).
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}
