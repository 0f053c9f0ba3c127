use clap::Args;
use cliffor::algebra::FourGroupElement;
use cliffor::hierarchy::{
    hierarchy_chain, match_reference_chain, search_convention, ConventionConfig, NotationOrder,
    SquareRule, MAX_CHAIN_LEVEL,
};
use serde_json::json;

use crate::commands::CliError;
use crate::config::{resolve, FileConfig};
use crate::report::ReportEnvelope;
use crate::Format;

#[derive(Debug, Args)]
pub struct HierarchyArgs {
    /// Highest level to compute (1..=6).
    #[arg(long)]
    pub max: Option<u32>,
    /// Rank all 16 conventions against the reference chain.
    #[arg(long)]
    pub search: bool,
    /// Quadratic form variant.
    #[arg(long, value_enum)]
    pub form: Option<FormArg>,
    /// New-generator square rule.
    #[arg(long, value_enum)]
    pub square_rule: Option<SquareRuleArg>,
    /// Signature tuple order.
    #[arg(long, value_enum)]
    pub order: Option<OrderArg>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FormArg {
    I,
    T,
    C,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SquareRuleArg {
    Q,
    MinusQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OrderArg {
    PlusFirst,
    MinusFirst,
}

fn form_from_name(name: &str) -> Result<FourGroupElement, CliError> {
    match name {
        "I" | "i" => Ok(FourGroupElement::I),
        "T" | "t" => Ok(FourGroupElement::T),
        "C" | "c" => Ok(FourGroupElement::C),
        "H" | "h" => Ok(FourGroupElement::H),
        other => Err(CliError::Usage(format!("unknown form {other:?}"))),
    }
}

fn square_rule_from_name(name: &str) -> Result<SquareRule, CliError> {
    match name {
        "q" => Ok(SquareRule::Q),
        "minus-q" => Ok(SquareRule::MinusQ),
        other => Err(CliError::Usage(format!("unknown square rule {other:?}"))),
    }
}

fn order_from_name(name: &str) -> Result<NotationOrder, CliError> {
    match name {
        "plus-first" => Ok(NotationOrder::PlusFirst),
        "minus-first" => Ok(NotationOrder::MinusFirst),
        other => Err(CliError::Usage(format!("unknown order {other:?}"))),
    }
}

pub fn resolve_convention(
    args: &HierarchyArgs,
    file: &FileConfig,
) -> Result<ConventionConfig, CliError> {
    let default = ConventionConfig::default();
    let file_form = match &file.form {
        Some(name) => Some(form_from_name(name)?),
        None => None,
    };
    let file_rule = match &file.square_rule {
        Some(name) => Some(square_rule_from_name(name)?),
        None => None,
    };
    let file_order = match &file.order {
        Some(name) => Some(order_from_name(name)?),
        None => None,
    };
    Ok(ConventionConfig {
        form: resolve(
            args.form.map(|f| match f {
                FormArg::I => FourGroupElement::I,
                FormArg::T => FourGroupElement::T,
                FormArg::C => FourGroupElement::C,
                FormArg::H => FourGroupElement::H,
            }),
            file_form,
            default.form,
        ),
        square_rule: resolve(
            args.square_rule.map(|r| match r {
                SquareRuleArg::Q => SquareRule::Q,
                SquareRuleArg::MinusQ => SquareRule::MinusQ,
            }),
            file_rule,
            default.square_rule,
        ),
        order: resolve(
            args.order.map(|o| match o {
                OrderArg::PlusFirst => NotationOrder::PlusFirst,
                OrderArg::MinusFirst => NotationOrder::MinusFirst,
            }),
            file_order,
            default.order,
        ),
    })
}

pub fn run(args: &HierarchyArgs, file: &FileConfig, format: Format) -> Result<(), CliError> {
    if format == Format::Csv {
        return Err(CliError::Usage(
            "csv output is only available for rep matrices and dirac spectra".into(),
        ));
    }
    let n_max = args.max.unwrap_or(MAX_CHAIN_LEVEL);

    if args.search {
        let reports = search_convention();
        let rows: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "config": r.cfg,
                    "match_count": r.match_count,
                    "first_mismatch": r.first_mismatch,
                    "levels": r.levels,
                })
            })
            .collect();
        let results = json!({
            "rows": rows,
            "best": {
                "config": reports[0].cfg,
                "match_count": reports[0].match_count,
                "match_vector": reports[0].levels.iter().map(|l| l.matches).collect::<Vec<bool>>(),
            },
        });
        ReportEnvelope::new("hierarchy", json!({"search": true}), results).print();
        return Ok(());
    }

    let cfg = resolve_convention(args, file)?;
    let chain = hierarchy_chain(n_max, &cfg).map_err(|e| CliError::domain("hierarchy", e))?;
    let report = match_reference_chain(&cfg).map_err(|e| CliError::domain("hierarchy", e))?;
    let results = json!({
        "chain": chain,
        "match": report,
    });
    ReportEnvelope::new("hierarchy", json!({"config": cfg, "max": n_max}), results).print();
    Ok(())
}
