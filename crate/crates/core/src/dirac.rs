//! A finite Dirac toy model with exactly computable operator spectra.
//!
//! `N` octads of Clifford generators carry the model: within octad `n`,
//! generators 1..=4 extend the Lorentz index, generators 5 and 6 are the
//! auxiliary pair the correspondences consume, and 7, 8 are constructed but
//! unused. Space-time coordinates, momenta and the imaginary-unit surrogate
//! `eta` are sums over octads of two-generator blade images:
//!
//! - `x[mu]  = -i tau      sum_n g^{mu 5}(n)`
//! - `p[mu]  = -i hbar/(N tau) sum_n g^{mu 6}(n)`
//! - `eta    = (1/N) sum_n g^{5 6}(n)`
//! - `dx[mu] = -i tau g^{mu 5}(1)`
//!
//! The momentum normalization uses the fixed energy quantum `hbar/(N tau)`
//! (the ergon) for every octad term. Time eigenvalues land on integer
//! multiples of the chronon `tau` between `-N tau` and `N tau`, and every
//! operator here has a finite, bounded spectrum.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, Blade, Sign, Signature};
use crate::matrix::OperatorMatrix;
use crate::rep::{blade_image, jordan_wigner_rep, pauli_chain, Pauli, RepError, RepResult};
use crate::spectrum::{spectrum, SpectrumError, SpectrumReport, MAX_EIGEN_DIM};

/// Octad counts past this cannot even be built (8N generators exceed the
/// global generator cap); eigensolves stop earlier, at the spectrum
/// dimension bound.
pub const MAX_OCTADS: usize = 6;

/// Generators per octad.
pub const OCTAD_SIZE: u32 = 8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DiracError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{octads} octads need {generators} generators; the model builds for at most 3 octads")]
    DimensionOverflow { octads: usize, generators: u32 },
    #[error("operator dimension {found} does not match the model dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Which octad supplies the `g^{mu 5}` factor of the finite mass operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MassOperatorChoice {
    /// A distinguished octad (1-based).
    Octad(usize),
    /// The average `(1/N) sum_n g^{mu 5}(n)`.
    Averaged,
}

impl Default for MassOperatorChoice {
    fn default() -> Self {
        MassOperatorChoice::Octad(1)
    }
}

/// Parameters of the toy model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OctadConfig {
    /// Number of octads `N`.
    pub n_octads: usize,
    /// Chronon: the elementary time quantum, in seconds.
    pub tau: f64,
    /// Action constant.
    pub hbar: f64,
    /// Squares of the eight generators of each octad (default all +1).
    pub octad_squares: [Sign; 8],
    /// Finite mass operator construction.
    pub mass_operator: MassOperatorChoice,
}

impl OctadConfig {
    pub fn new(n_octads: usize) -> OctadConfig {
        OctadConfig {
            n_octads,
            tau: 1.0,
            hbar: 1.0,
            octad_squares: [Sign::Plus; 8],
            mass_operator: MassOperatorChoice::default(),
        }
    }

    pub fn validate(&self) -> Result<(), DiracError> {
        if self.n_octads == 0 || self.n_octads > MAX_OCTADS {
            return Err(DiracError::InvalidConfig(format!(
                "octad count must be in 1..={MAX_OCTADS}, got {}",
                self.n_octads
            )));
        }
        if !(self.tau.is_finite() && self.tau > 0.0) {
            return Err(DiracError::InvalidConfig(format!(
                "chronon must be positive and finite, got {}",
                self.tau
            )));
        }
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(DiracError::InvalidConfig(format!(
                "hbar must be positive and finite, got {}",
                self.hbar
            )));
        }
        if let MassOperatorChoice::Octad(j) = self.mass_operator {
            if j == 0 || j > self.n_octads {
                return Err(DiracError::InvalidConfig(format!(
                    "mass octad {j} is not in 1..={}",
                    self.n_octads
                )));
            }
        }
        Ok(())
    }

    /// The energy quantum `hbar / (N tau)`.
    pub fn ergon(&self) -> f64 {
        self.hbar / (self.n_octads as f64 * self.tau)
    }

    /// Concatenated generator signature of all octads.
    pub fn signature(&self) -> Result<Signature, AlgebraError> {
        Signature::from_signs_iter(std::iter::repeat_n(self.octad_squares, self.n_octads).flatten())
    }

    /// Matrix dimension `16^N`.
    pub fn dim(&self) -> u64 {
        16u64.pow(self.n_octads as u32)
    }
}

/// Proportionality fit of a commutator `[x, p]` against `hbar * eta`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommutatorReport {
    pub mu: usize,
    pub nu: usize,
    /// `max |[x_mu, p_nu]|`.
    pub commutator_norm: f64,
    /// Least-squares scalar `c` in `[x, p] = c hbar eta`.
    pub c_re: f64,
    pub c_im: f64,
    /// `max |[x, p] - c hbar eta|`.
    pub residual: f64,
}

/// Outcome of the octad factorization check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorizationCheck {
    pub ok: bool,
    pub max_deviation: f64,
}

/// The built model: the representation and the named operators.
#[derive(Debug, Clone)]
pub struct ToyOperators {
    pub cfg: OctadConfig,
    pub rep: RepResult,
    /// Space-time coordinates, `mu = 1..=4` at indices `0..=3` (index 0 is
    /// the time coordinate).
    pub x: [OperatorMatrix; 4],
    /// Conjugate momenta.
    pub p: [OperatorMatrix; 4],
    /// Space-time differentials (octad 1).
    pub dx: [OperatorMatrix; 4],
    /// The imaginary-unit surrogate `(1/N) sum_n g^{56}(n)`.
    pub eta: OperatorMatrix,
    /// The finite mass operator.
    pub mass: OperatorMatrix,
}

/// Builds all model operators for a configuration.
pub fn build_toy_model(cfg: &OctadConfig) -> Result<ToyOperators, DiracError> {
    cfg.validate()?;
    let generators = cfg.n_octads as u32 * OCTAD_SIZE;
    if generators > crate::algebra::MAX_GENERATORS {
        return Err(DiracError::DimensionOverflow {
            octads: cfg.n_octads,
            generators,
        });
    }
    let sig = cfg.signature()?;
    let rep = jordan_wigner_rep(&sig)?;
    let dim = rep.spinor_dim;
    let n = cfg.n_octads;

    // two-generator blade image within octad `oct` (indices 1-based)
    let pair = |oct: usize, a: u32, b: u32| -> Result<OperatorMatrix, DiracError> {
        let base = (oct as u32 - 1) * OCTAD_SIZE;
        Ok(blade_image(
            &rep,
            Blade::from_indices(&[base + a - 1, base + b - 1]),
        )?)
    };
    let octad_sum = |a: u32, b: u32| -> Result<OperatorMatrix, DiracError> {
        let mut acc = OperatorMatrix::zeros(dim);
        for oct in 1..=n {
            acc = acc.add(&pair(oct, a, b)?);
        }
        Ok(acc)
    };

    let minus_i_tau = Complex64::new(0.0, -cfg.tau);
    let minus_i_ergon = Complex64::new(0.0, -cfg.ergon());

    let mut x = Vec::with_capacity(4);
    let mut p = Vec::with_capacity(4);
    let mut dx = Vec::with_capacity(4);
    for mu in 1..=4u32 {
        x.push(octad_sum(mu, 5)?.scale(minus_i_tau));
        p.push(octad_sum(mu, 6)?.scale(minus_i_ergon));
        dx.push(pair(1, mu, 5)?.scale(minus_i_tau));
    }
    let eta = octad_sum(5, 6)?.scale(Complex64::new(1.0 / n as f64, 0.0));

    let x: [OperatorMatrix; 4] = x.try_into().expect("four coordinates");
    let p: [OperatorMatrix; 4] = p.try_into().expect("four momenta");
    let dx: [OperatorMatrix; 4] = dx.try_into().expect("four differentials");

    // M = sum_mu g^{mu 5} d_mu with d_mu realized as (i/hbar) p[mu]
    let i_over_hbar = Complex64::new(0.0, 1.0 / cfg.hbar);
    let mut mass = OperatorMatrix::zeros(dim);
    for mu in 1..=4u32 {
        let factor = match cfg.mass_operator {
            MassOperatorChoice::Octad(j) => pair(j, mu, 5)?,
            MassOperatorChoice::Averaged => {
                octad_sum(mu, 5)?.scale(Complex64::new(1.0 / n as f64, 0.0))
            }
        };
        mass = mass.add(&factor.mul(&p[mu as usize - 1]).scale(i_over_hbar));
    }

    Ok(ToyOperators {
        cfg: cfg.clone(),
        rep,
        x,
        p,
        dx,
        eta,
        mass,
    })
}

impl ToyOperators {
    pub fn dim(&self) -> usize {
        self.rep.spinor_dim
    }

    /// Generator `alpha` (1-based) of octad `oct` (1-based).
    pub fn gamma(&self, oct: usize, alpha: u32) -> &OperatorMatrix {
        &self.rep.gammas[(oct - 1) * OCTAD_SIZE as usize + (alpha - 1) as usize]
    }

    /// Spectrum of a coordinate operator, `mu` 1-based.
    pub fn coordinate_spectrum(&self, mu: usize) -> Result<SpectrumReport, DiracError> {
        self.check_eigensolve_bound()?;
        Ok(spectrum(&self.x[mu - 1])?)
    }

    /// Spectrum of the time coordinate (`mu = 1`).
    pub fn time_spectrum(&self) -> Result<SpectrumReport, DiracError> {
        self.coordinate_spectrum(1)
    }

    /// Spectrum of `eta`; its eigenvalue moduli lie in [0, 1].
    pub fn eta_spectrum(&self) -> Result<SpectrumReport, DiracError> {
        self.check_eigensolve_bound()?;
        Ok(spectrum(&self.eta)?)
    }

    fn check_eigensolve_bound(&self) -> Result<(), DiracError> {
        if self.dim() > MAX_EIGEN_DIM {
            return Err(DiracError::Spectrum(SpectrumError::DimensionTooLarge {
                dim: self.dim(),
            }));
        }
        Ok(())
    }

    /// `[x_mu, p_nu]` (1-based indices) fitted against `hbar eta`.
    pub fn commutator_xp(&self, mu: usize, nu: usize) -> Result<CommutatorReport, DiracError> {
        if !(1..=4).contains(&mu) || !(1..=4).contains(&nu) {
            return Err(DiracError::InvalidConfig(format!(
                "coordinate indices must be in 1..=4, got ({mu}, {nu})"
            )));
        }
        let x = &self.x[mu - 1];
        let p = &self.p[nu - 1];
        let commutator = x.mul(p).sub(&p.mul(x));
        let target = self.eta.scale(Complex64::new(self.cfg.hbar, 0.0));
        let denom = target.frob_inner(&target).re;
        let c = if denom > 0.0 {
            target.frob_inner(&commutator) / denom
        } else {
            Complex64::ZERO
        };
        let residual = commutator.sub(&target.scale(c)).inf_norm();
        Ok(CommutatorReport {
            mu,
            nu,
            commutator_norm: commutator.inf_norm(),
            c_re: c.re,
            c_im: c.im,
            residual,
        })
    }

    /// Evolves a one-particle operator by conjugation with
    /// `exp(-i M delta_tau)`.
    pub fn mass_evolution(
        &self,
        x: &OperatorMatrix,
        delta_tau: f64,
    ) -> Result<OperatorMatrix, DiracError> {
        if x.dim() != self.dim() {
            return Err(DiracError::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        if !x.is_finite() || !delta_tau.is_finite() {
            return Err(DiracError::NonFinite);
        }
        if delta_tau == 0.0 {
            return Ok(x.clone());
        }
        let arg = self.mass.scale(Complex64::new(0.0, -delta_tau));
        let forward = arg.expm();
        let backward = arg.scale(Complex64::new(-1.0, 0.0)).expm();
        Ok(forward.mul(x).mul(&backward))
    }

    /// The generator of the equation of motion: `-i [M, X]`.
    pub fn equation_of_motion(&self, x: &OperatorMatrix) -> Result<OperatorMatrix, DiracError> {
        if x.dim() != self.dim() {
            return Err(DiracError::DimensionMismatch {
                expected: self.dim(),
                found: x.dim(),
            });
        }
        let commutator = self.mass.mul(x).sub(&x.mul(&self.mass));
        Ok(commutator.scale(Complex64::new(0.0, -1.0)))
    }

    /// Verifies that the generators built on the concatenated signature equal
    /// the explicit tensor-product construction: octad `n` site generators
    /// behind the product-of-all-octad-generators parity factor on every
    /// preceding octad.
    pub fn octad_factorization_check(&self) -> Result<FactorizationCheck, DiracError> {
        let octad_sig = Signature::from_signs(&self.cfg.octad_squares)?;
        let octad_rep = jordan_wigner_rep(&octad_sig)?;
        let parity = octad_parity_factor();
        let mut max_deviation = 0.0f64;
        for oct in 1..=self.cfg.n_octads {
            for alpha in 1..=OCTAD_SIZE {
                let mut explicit = OperatorMatrix::identity(1);
                for _ in 0..oct - 1 {
                    explicit = explicit.kron(&parity);
                }
                explicit = explicit.kron(&octad_rep.gammas[(alpha - 1) as usize]);
                for _ in oct..self.cfg.n_octads {
                    explicit = explicit.kron(&OperatorMatrix::identity(16));
                }
                let deviation = explicit.sub(self.gamma(oct, alpha)).inf_norm();
                max_deviation = max_deviation.max(deviation);
            }
        }
        Ok(FactorizationCheck {
            ok: max_deviation <= 1e-12,
            max_deviation,
        })
    }
}

/// The chain factor carried by each preceding octad in the factorized form
/// of a generator: the (positive-construction) product of all eight octad
/// generators, which is the Z chain on the octad's four sites.
pub fn octad_parity_factor() -> OperatorMatrix {
    pauli_chain(&[Pauli::Z, Pauli::Z, Pauli::Z, Pauli::Z])
}
