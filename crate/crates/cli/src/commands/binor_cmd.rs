use clap::Args;
use cliffor::binor::{
    binor_inf, binor_sum, binor_sup, binor_xand, binor_xor, bool_eval, complement_top,
    full_algebra_state, monomial_grade, top, Binor, BoolFn, BoolOp,
};
use cliffor::ring::RingTag;
use serde_json::json;

use crate::commands::CliError;
use crate::config::FileConfig;
use crate::dynmv::{parse_dyn, DynMultivector};
use crate::report::ReportEnvelope;
use crate::Format;

#[derive(Debug, Args)]
pub struct BinorArgs {
    /// Number of generators.
    #[arg(long)]
    pub gens: Option<u32>,
    /// Explicit generator signature (signs collapse mod 2; length matters).
    #[arg(long)]
    pub signature: Option<String>,
    /// The operation to apply.
    #[arg(value_enum)]
    pub op: BinorOp,
    /// Operand expressions (binor syntax), or 0/1 strings for bool-* ops.
    pub args: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BinorOp {
    /// Logical XOR: the GF(2) geometric product.
    Xor,
    /// Mod-2 sum.
    Sum,
    /// Terms present in either.
    Sup,
    /// Terms present in both.
    Inf,
    /// Top times XOR.
    Xand,
    /// Multiplication by the top state.
    Complement,
    /// Grade of a sharp (monomial) state.
    Grade,
    /// The product of all generators.
    Top,
    /// The formal sum of all monomials.
    FullState,
    BoolOr,
    BoolAnd,
    BoolXor,
    BoolXand,
    BoolPor,
    BoolPand,
}

fn expect_args(args: &[String], n: usize, op: &str) -> Result<(), CliError> {
    if args.len() != n {
        return Err(CliError::Usage(format!(
            "{op} takes exactly {n} argument{}",
            if n == 1 { "" } else { "s" }
        )));
    }
    Ok(())
}

fn parse_binor(text: &str, sig: &cliffor::Signature) -> Result<Binor, CliError> {
    match parse_dyn(text, RingTag::Gf2, sig).map_err(CliError::parse_error)? {
        DynMultivector::Gf2(b) => Ok(b),
        _ => unreachable!("gf2 parse returns a binor"),
    }
}

fn parse_bits(text: &str) -> Result<BoolFn, CliError> {
    let values = text
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(CliError::Usage(format!(
                "boolean functions are written as 0/1 strings, found {other:?}"
            ))),
        })
        .collect::<Result<Vec<bool>, CliError>>()?;
    Ok(BoolFn::new(values))
}

fn bits_to_string(f: &BoolFn) -> String {
    f.values()
        .iter()
        .map(|&b| if b { '1' } else { '0' })
        .collect()
}

pub fn run(args: &BinorArgs, file: &FileConfig, format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(
            "csv output is only available for rep matrices and dirac spectra".into(),
        ));
    }
    let sig = super::eval_cmd::resolve_signature(&args.signature, args.gens, file, 4)?;
    let op_name = format!("{:?}", args.op).to_lowercase();

    let results = match args.op {
        BinorOp::Xor | BinorOp::Sum | BinorOp::Sup | BinorOp::Inf | BinorOp::Xand => {
            expect_args(&args.args, 2, &op_name)?;
            let a = parse_binor(&args.args[0], &sig)?;
            let b = parse_binor(&args.args[1], &sig)?;
            let out = match args.op {
                BinorOp::Xor => binor_xor(&a, &b),
                BinorOp::Sum => binor_sum(&a, &b),
                BinorOp::Sup => binor_sup(&a, &b),
                BinorOp::Inf => binor_inf(&a, &b),
                _ => binor_xand(&a, &b),
            };
            json!({
                "a": a.to_string(),
                "b": b.to_string(),
                "result": out.to_string(),
                "term_count": out.term_count(),
            })
        }
        BinorOp::Complement => {
            expect_args(&args.args, 1, &op_name)?;
            let a = parse_binor(&args.args[0], &sig)?;
            let out = complement_top(&a);
            json!({"a": a.to_string(), "result": out.to_string()})
        }
        BinorOp::Grade => {
            expect_args(&args.args, 1, &op_name)?;
            let a = parse_binor(&args.args[0], &sig)?;
            let grade = monomial_grade(&a).map_err(|e| CliError::domain("binor", e))?;
            json!({"a": a.to_string(), "grade": grade})
        }
        BinorOp::Top => {
            expect_args(&args.args, 0, &op_name)?;
            json!({"result": top(&sig).to_string()})
        }
        BinorOp::FullState => {
            expect_args(&args.args, 0, &op_name)?;
            let state = full_algebra_state(&sig).map_err(|e| CliError::domain("binor", e))?;
            json!({
                "term_count": state.term_count(),
                "result": if sig.len() <= 6 {
                    serde_json::Value::String(state.to_string())
                } else {
                    serde_json::Value::Null
                },
            })
        }
        BinorOp::BoolOr
        | BinorOp::BoolAnd
        | BinorOp::BoolXor
        | BinorOp::BoolXand
        | BinorOp::BoolPor
        | BinorOp::BoolPand => {
            expect_args(&args.args, 2, &op_name)?;
            let a = parse_bits(&args.args[0])?;
            let b = parse_bits(&args.args[1])?;
            let op = match args.op {
                BinorOp::BoolOr => BoolOp::Or,
                BinorOp::BoolAnd => BoolOp::And,
                BinorOp::BoolXor => BoolOp::Xor,
                BinorOp::BoolXand => BoolOp::Xand,
                BinorOp::BoolPor => BoolOp::Por,
                _ => BoolOp::Pand,
            };
            let out = bool_eval(op, &a, &b).map_err(|e| CliError::domain("binor", e))?;
            json!({
                "a": bits_to_string(&a),
                "b": bits_to_string(&b),
                "result": bits_to_string(&out),
            })
        }
    };

    let config = json!({"signature": sig.to_string(), "op": op_name});
    ReportEnvelope::new("binor", config, results).print();
    Ok(())
}
