use clap::Args;
use cliffor::algebra::Signature;
use cliffor::ring::RingTag;
use serde_json::json;

use crate::commands::{parse_signature, CliError};
use crate::config::{resolve, FileConfig};
use crate::dynmv::parse_dyn;
use crate::report::ReportEnvelope;
use crate::Format;

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Coefficient ring.
    #[arg(long, value_enum)]
    pub ring: Option<RingArg>,
    /// Number of generators (all squaring +1).
    #[arg(long)]
    pub gens: Option<u32>,
    /// Explicit generator signature, e.g. "+++-" (overrides --gens).
    #[arg(long)]
    pub signature: Option<String>,
    /// The expression to evaluate.
    pub expr: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RingArg {
    Gf2,
    Rational,
    Float64,
}

impl From<RingArg> for RingTag {
    fn from(value: RingArg) -> RingTag {
        match value {
            RingArg::Gf2 => RingTag::Gf2,
            RingArg::Rational => RingTag::Rational,
            RingArg::Float64 => RingTag::Float64,
        }
    }
}

pub fn ring_from_name(name: &str) -> Result<RingTag, CliError> {
    match name {
        "gf2" => Ok(RingTag::Gf2),
        "rational" => Ok(RingTag::Rational),
        "float64" | "float" => Ok(RingTag::Float64),
        other => Err(CliError::Usage(format!("unknown ring {other:?}"))),
    }
}

/// Resolves the evaluation context shared by `eval` and `binor`:
/// an explicit signature wins over a generator count.
pub fn resolve_signature(
    flag_signature: &Option<String>,
    flag_gens: Option<u32>,
    file: &FileConfig,
    default_gens: u32,
) -> Result<Signature, CliError> {
    if let Some(pattern) = flag_signature.as_ref().or(file.signature.as_ref()) {
        return parse_signature(pattern);
    }
    let gens = resolve(flag_gens, file.gens, default_gens);
    Signature::euclidean(gens).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn run(args: &EvalArgs, file: &FileConfig, format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(
            "csv output is only available for rep matrices and dirac spectra".into(),
        ));
    }
    let file_ring = match &file.ring {
        Some(name) => Some(ring_from_name(name)?),
        None => None,
    };
    let ring = resolve(args.ring.map(RingTag::from), file_ring, RingTag::Rational);
    let sig = resolve_signature(&args.signature, args.gens, file, 3)?;

    let mv = parse_dyn(&args.expr, ring, &sig).map_err(CliError::parse_error)?;

    let results = json!({
        "input": args.expr,
        "ring": mv.ring(),
        "signature": sig.to_string(),
        "canonical": mv.canonical(),
        "term_count": mv.term_count(),
        "grades": mv.grades(),
        "terms": mv.terms_json(),
    });
    let config = json!({
        "ring": ring,
        "signature": sig.to_string(),
    });
    ReportEnvelope::new("eval", config, results).print();
    Ok(())
}
