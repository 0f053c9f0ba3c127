use clap::Args;
use cliffor::algebra::Sign;
use cliffor::dirac::{build_toy_model, MassOperatorChoice, OctadConfig};
use cliffor::spectrum::SpectrumReport;
use num_complex::Complex64;
use serde_json::json;

use crate::commands::CliError;
use crate::config::{resolve, FileConfig};
use crate::report::ReportEnvelope;
use crate::Format;

#[derive(Debug, Args)]
pub struct DiracArgs {
    /// Octad count N.
    #[arg(long)]
    pub n: Option<usize>,
    /// Chronon (time quantum).
    #[arg(long)]
    pub tau: Option<f64>,
    /// Action constant.
    #[arg(long)]
    pub hbar: Option<f64>,
    /// Signature of one octad: 8 characters of '+'/'-'.
    #[arg(long)]
    pub signature: Option<String>,
    /// Which report to produce.
    #[arg(long, value_enum)]
    pub report: DiracReport,
    /// Distinguished octad supplying the mass-operator factor.
    #[arg(long, conflicts_with = "mass_averaged")]
    pub mass_octad: Option<usize>,
    /// Average the mass-operator factor over octads.
    #[arg(long)]
    pub mass_averaged: bool,
    /// Evolution step (defaults to 1e-6 * N * tau).
    #[arg(long)]
    pub delta_tau: Option<f64>,
    /// Restrict the commutator report to one coordinate pair.
    #[arg(long)]
    pub mu: Option<usize>,
    #[arg(long)]
    pub nu: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DiracReport {
    TimeSpectrum,
    EtaSpectrum,
    Commutators,
    Factorization,
    Evolution,
}

fn octad_signature(pattern: &str) -> Result<[Sign; 8], CliError> {
    let signs: Vec<Sign> = pattern
        .chars()
        .map(|c| match c {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(CliError::Usage(format!(
                "octad signature may contain only '+' and '-', found {other:?}"
            ))),
        })
        .collect::<Result<_, _>>()?;
    signs
        .try_into()
        .map_err(|_| CliError::Usage("octad signature must have exactly 8 characters".into()))
}

fn build_config(args: &DiracArgs, file: &FileConfig) -> Result<OctadConfig, CliError> {
    let mut cfg = OctadConfig::new(resolve(args.n, file.octads, 1));
    cfg.tau = resolve(args.tau, file.tau, 1.0);
    cfg.hbar = resolve(args.hbar, file.hbar, 1.0);
    if let Some(pattern) = args.signature.as_ref().or(file.octad_signature.as_ref()) {
        cfg.octad_squares = octad_signature(pattern)?;
    }
    if args.mass_averaged {
        cfg.mass_operator = MassOperatorChoice::Averaged;
    } else if let Some(j) = args.mass_octad {
        cfg.mass_operator = MassOperatorChoice::Octad(j);
    }
    Ok(cfg)
}

fn spectrum_json(report: &SpectrumReport) -> serde_json::Value {
    json!({
        "dim": report.dim,
        "eigenvalues": report.entries,
        "max_residual": report.max_residual,
    })
}

fn print_spectrum_csv(report: &SpectrumReport) {
    println!("re,im,multiplicity");
    for e in &report.entries {
        println!("{},{},{}", e.re, e.im, e.multiplicity);
    }
}

pub fn run(args: &DiracArgs, file: &FileConfig, format: Format) -> Result<(), CliError> {
    let cfg = build_config(args, file)?;
    if format == Format::Csv
        && !matches!(
            args.report,
            DiracReport::TimeSpectrum | DiracReport::EtaSpectrum
        )
    {
        return Err(CliError::Usage(
            "csv output is only available for rep matrices and dirac spectra".into(),
        ));
    }
    let model = build_toy_model(&cfg).map_err(|e| CliError::domain("dirac", e))?;
    let config_echo = json!({
        "octads": cfg.n_octads,
        "tau": cfg.tau,
        "hbar": cfg.hbar,
        "ergon": cfg.ergon(),
        "octad_squares": cfg.octad_squares,
        "mass_operator": cfg.mass_operator,
        "dim": model.dim(),
    });

    match args.report {
        DiracReport::TimeSpectrum => {
            let report = model
                .time_spectrum()
                .map_err(|e| CliError::domain("dirac", e))?;
            if format == Format::Csv {
                print_spectrum_csv(&report);
                return Ok(());
            }
            let in_chronons: Vec<f64> = report.entries.iter().map(|e| e.re / cfg.tau).collect();
            let results = json!({
                "spectrum": spectrum_json(&report),
                "eigenvalues_over_tau": in_chronons,
                "max_abs_imag": report.max_abs_imag(),
            });
            ReportEnvelope::new("dirac", config_echo, results)
                .with_residuals(json!({"max_residual": report.max_residual}))
                .print();
        }
        DiracReport::EtaSpectrum => {
            let report = model
                .eta_spectrum()
                .map_err(|e| CliError::domain("dirac", e))?;
            if format == Format::Csv {
                print_spectrum_csv(&report);
                return Ok(());
            }
            let results = json!({
                "spectrum": spectrum_json(&report),
                "distinct_moduli": report.distinct_moduli(1e-9),
                "max_modulus": report.max_modulus(),
            });
            ReportEnvelope::new("dirac", config_echo, results)
                .with_residuals(json!({"max_residual": report.max_residual}))
                .print();
        }
        DiracReport::Commutators => {
            let pairs: Vec<(usize, usize)> = match (args.mu, args.nu) {
                (Some(mu), Some(nu)) => vec![(mu, nu)],
                (None, None) => (1..=4)
                    .flat_map(|mu| (1..=4).map(move |nu| (mu, nu)))
                    .collect(),
                _ => {
                    return Err(CliError::Usage(
                        "--mu and --nu must be given together".into(),
                    ))
                }
            };
            let mut reports = Vec::new();
            let mut max_same_residual = 0.0f64;
            let mut max_cross_norm = 0.0f64;
            for (mu, nu) in pairs {
                let r = model
                    .commutator_xp(mu, nu)
                    .map_err(|e| CliError::domain("dirac", e))?;
                if mu == nu {
                    max_same_residual = max_same_residual.max(r.residual);
                } else {
                    max_cross_norm = max_cross_norm.max(r.commutator_norm);
                }
                reports.push(r);
            }
            let results = json!({"commutators": reports});
            ReportEnvelope::new("dirac", config_echo, results)
                .with_residuals(json!({
                    "max_same_index_residual": max_same_residual,
                    "max_cross_index_norm": max_cross_norm,
                }))
                .print();
        }
        DiracReport::Factorization => {
            let check = model
                .octad_factorization_check()
                .map_err(|e| CliError::domain("dirac", e))?;
            let results = json!({"ok": check.ok, "max_deviation": check.max_deviation});
            ReportEnvelope::new("dirac", config_echo, results)
                .with_residuals(json!({"max_deviation": check.max_deviation}))
                .print();
        }
        DiracReport::Evolution => {
            let scale = cfg.hbar / cfg.ergon();
            let delta = args.delta_tau.unwrap_or(1e-6 * scale);
            // drive a spatial coordinate, which does not commute with M
            let x = model.x[1].clone();
            let target = model
                .equation_of_motion(&x)
                .map_err(|e| CliError::domain("dirac", e))?;
            let forward = model
                .mass_evolution(&x, delta)
                .map_err(|e| CliError::domain("dirac", e))?;
            let backward = model
                .mass_evolution(&x, -delta)
                .map_err(|e| CliError::domain("dirac", e))?;
            let denom = target.inf_norm().max(1e-30);
            let fwd_err = forward
                .sub(&x)
                .scale(Complex64::new(1.0 / delta, 0.0))
                .sub(&target)
                .inf_norm()
                / denom;
            let central_err = forward
                .sub(&backward)
                .scale(Complex64::new(0.5 / delta, 0.0))
                .sub(&target)
                .inf_norm()
                / denom;
            let results = json!({
                "witness": "x2",
                "delta_tau": delta,
                "commutator_norm": target.inf_norm(),
                "forward_difference_rel_error": fwd_err,
                "central_difference_rel_error": central_err,
            });
            ReportEnvelope::new("dirac", config_echo, results)
                .with_residuals(json!({
                    "forward_difference_rel_error": fwd_err,
                    "central_difference_rel_error": central_err,
                }))
                .print();
        }
    }
    Ok(())
}
