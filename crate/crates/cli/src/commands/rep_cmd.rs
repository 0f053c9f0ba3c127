use clap::Args;
use cliffor::rep::{check_basis_injectivity, jordan_wigner_rep, verify_relations};
use serde_json::json;

use crate::commands::CliError;
use crate::config::FileConfig;
use crate::report::ReportEnvelope;
use crate::Format;

#[derive(Debug, Args)]
pub struct RepArgs {
    /// Explicit generator signature, e.g. "+++-".
    #[arg(long)]
    pub signature: Option<String>,
    /// Number of generators (all squaring +1).
    #[arg(long)]
    pub gens: Option<u32>,
}

pub fn run(args: &RepArgs, file: &FileConfig, format: Format) -> Result<(), CliError> {
    let sig = super::eval_cmd::resolve_signature(&args.signature, args.gens, file, 3)?;
    let rep = jordan_wigner_rep(&sig).map_err(|e| CliError::domain("rep", e))?;
    let relations = verify_relations(&rep);
    let injectivity = check_basis_injectivity(&rep);

    if format == Format::Csv {
        // nonzero entries of every generator matrix
        println!("generator,row,col,re,im");
        for (index, gamma) in rep.gammas.iter().enumerate() {
            for row in 0..gamma.dim() {
                for col in 0..gamma.dim() {
                    let v = gamma.entry(row, col);
                    if v != num_complex::Complex64::ZERO {
                        println!("{},{},{},{},{}", index + 1, row, col, v.re, v.im);
                    }
                }
            }
        }
        return Ok(());
    }

    let results = json!({
        "signature": sig.to_string(),
        "generator_count": sig.len(),
        "spinor_dim": rep.spinor_dim,
        "faithful": rep.faithful,
        "relations": {"ok": relations.ok, "max_deviation": relations.max_deviation},
        "injectivity": {"ok": injectivity.ok, "max_trace_deviation": injectivity.max_deviation},
    });
    let residuals = json!({
        "relation_max_deviation": relations.max_deviation,
        "injectivity_trace_deviation": injectivity.max_deviation,
    });
    ReportEnvelope::new("rep", json!({"signature": sig.to_string()}), results)
        .with_residuals(residuals)
        .print();
    Ok(())
}
