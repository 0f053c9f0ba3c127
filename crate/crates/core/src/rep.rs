//! Matrix representations of Clifford algebras.
//!
//! Generators are realized as tensor chains of 2x2 blocks: pair `j` of
//! generators acts on site `j` as X and Y behind a Z chain on all earlier
//! sites, which makes distinct generators anticommute and every generator an
//! involution. A generator that squares to -1 is the +1 construction scaled
//! by the imaginary unit. Every chain is a scaled permutation matrix, so
//! generator products stay sparse.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{AlgebraError, Blade, Sign, Signature};
use crate::matrix::OperatorMatrix;
use crate::multivector::Multivector;
use crate::ring::SignedRing;

/// Generator bound for the blade-basis regular representation (matrix
/// dimension `2^k`).
pub const MAX_REGULAR_REP_GENERATORS: u32 = 12;

/// Deviation bound certified by [`verify_relations`].
pub const RELATION_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("multivector signature does not match the representation")]
    SignatureMismatch,
    #[error(
        "regular representation over {requested} generators exceeds the bound of {MAX_REGULAR_REP_GENERATORS}"
    )]
    RegularRepBound { requested: u32 },
}

/// 2x2 tensor factors of the generator chains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    /// Row action of the 2x2 block: input row bit to (column bit, value).
    fn row_action(self, bit: u32) -> (u32, Complex64) {
        match self {
            Pauli::I => (bit, Complex64::new(1.0, 0.0)),
            Pauli::X => (bit ^ 1, Complex64::new(1.0, 0.0)),
            // Y = [[0, -i], [i, 0]]
            Pauli::Y => (
                bit ^ 1,
                Complex64::new(0.0, if bit == 0 { -1.0 } else { 1.0 }),
            ),
            Pauli::Z => (bit, Complex64::new(if bit == 0 { 1.0 } else { -1.0 }, 0.0)),
        }
    }
}

/// Kronecker chain of 2x2 blocks (site 0 most significant), as a scaled
/// permutation matrix.
pub fn pauli_chain(factors: &[Pauli]) -> OperatorMatrix {
    let sites = factors.len();
    let dim = 1usize << sites;
    let mut columns = Vec::with_capacity(dim);
    let mut values = Vec::with_capacity(dim);
    for row in 0..dim as u32 {
        let mut col = 0u32;
        let mut val = Complex64::new(1.0, 0.0);
        for (s, factor) in factors.iter().enumerate() {
            let shift = (sites - 1 - s) as u32;
            let bit = row >> shift & 1;
            let (out_bit, v) = factor.row_action(bit);
            col |= out_bit << shift;
            val *= v;
        }
        columns.push(col);
        values.push(val);
    }
    OperatorMatrix::scaled_permutation(columns, values)
}

/// A concrete matrix representation: one generator matrix per generator of
/// the signature.
#[derive(Debug, Clone)]
pub struct RepResult {
    pub sig: Signature,
    pub gammas: Vec<OperatorMatrix>,
    pub spinor_dim: usize,
    /// Structural basis-injectivity verdict: the images of distinct basis
    /// blades are trace-orthogonal and nonzero. Exhaustive over all blades
    /// for up to 8 generators, a deterministic sample above that.
    pub faithful: bool,
}

/// Builds the tensor-chain representation of a signature. The matrices
/// satisfy the anticommutation relations exactly (entries are exact units).
pub fn jordan_wigner_rep(sig: &Signature) -> Result<RepResult, RepError> {
    let k = sig.len();
    let sites = k.div_ceil(2) as usize;
    let dim = 1usize << sites;
    let mut gammas = Vec::with_capacity(k as usize);
    for a in 0..k {
        let site = (a / 2) as usize;
        let mut factors = vec![Pauli::Z; site];
        factors.push(if a % 2 == 0 { Pauli::X } else { Pauli::Y });
        factors.resize(sites, Pauli::I);
        let mut gamma = pauli_chain(&factors);
        if sig.square(a)? == Sign::Minus {
            gamma = gamma.scale(Complex64::new(0.0, 1.0));
        }
        gammas.push(gamma);
    }
    let mut rep = RepResult {
        sig: sig.clone(),
        gammas,
        spinor_dim: dim,
        faithful: false,
    };
    rep.faithful = verify_relations(&rep).ok && check_basis_injectivity(&rep).ok;
    Ok(rep)
}

/// Outcome of a verification pass over a representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationCheck {
    pub ok: bool,
    pub max_deviation: f64,
}

/// Checks `g_a g_b + g_b g_a = 2 metric_ab Id` for all generator pairs.
pub fn verify_relations(rep: &RepResult) -> RelationCheck {
    let k = rep.gammas.len();
    let id = OperatorMatrix::identity(rep.spinor_dim);
    let mut max_deviation = 0.0f64;
    for a in 0..k {
        for b in a..k {
            let anti = rep.gammas[a]
                .mul(&rep.gammas[b])
                .add(&rep.gammas[b].mul(&rep.gammas[a]));
            let deviation = if a == b {
                let square = rep.sig.square(a as u32).expect("generator in range");
                let expected = id.scale(Complex64::new(2.0 * square.to_i8() as f64, 0.0));
                anti.sub(&expected).inf_norm()
            } else {
                anti.inf_norm()
            };
            max_deviation = max_deviation.max(deviation);
        }
    }
    RelationCheck {
        ok: max_deviation <= RELATION_TOL,
        max_deviation,
    }
}

/// Matrix image of a basis blade: the ascending product of its generator
/// matrices.
pub fn blade_image(rep: &RepResult, blade: Blade) -> Result<OperatorMatrix, RepError> {
    if !rep.sig.contains_blade(blade) {
        return Err(RepError::Algebra(AlgebraError::IndexOutOfRange {
            index: blade.bits().trailing_zeros().max(rep.sig.len()),
            len: rep.sig.len(),
        }));
    }
    let mut out: Option<OperatorMatrix> = None;
    for i in blade.indices() {
        let gamma = &rep.gammas[i as usize];
        out = Some(match out {
            Some(acc) => acc.mul(gamma),
            None => gamma.clone(),
        });
    }
    Ok(out.unwrap_or_else(|| OperatorMatrix::identity(rep.spinor_dim)))
}

/// Basis-injectivity check: images of distinct blades are linearly
/// independent iff every nonempty blade image is traceless (the images are
/// trace-orthogonal scaled permutations). Exhaustive up to 8 generators,
/// a fixed deterministic sample above.
pub fn check_basis_injectivity(rep: &RepResult) -> RelationCheck {
    let k = rep.sig.len();
    let blades: Vec<Blade> = if k <= 8 {
        (1..rep.sig.blade_count())
            .map(|bits| Blade::from_bits(bits as u32))
            .collect()
    } else {
        // all grade <= 2 blades, the top blade, and a fixed pseudorandom sample
        let mut blades: Vec<Blade> = (0..k).map(Blade::generator).collect();
        for a in 0..k {
            for b in a + 1..k {
                blades.push(Blade::from_indices(&[a, b]));
            }
        }
        blades.push(Blade::from_bits(rep.sig.full_mask()));
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..256 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let bits = (state >> 16) as u32 & rep.sig.full_mask();
            if bits != 0 {
                blades.push(Blade::from_bits(bits));
            }
        }
        blades
    };
    let mut max_deviation = 0.0f64;
    let mut nonzero = true;
    for blade in blades {
        let image = blade_image(rep, blade).expect("blade fits signature");
        max_deviation = max_deviation.max(image.trace().norm());
        nonzero &= image.inf_norm() > 0.5;
    }
    RelationCheck {
        ok: nonzero && max_deviation <= RELATION_TOL,
        max_deviation,
    }
}

/// Linear extension of the representation to a multivector.
pub fn rep_multivector<R: SignedRing>(
    x: &Multivector<R>,
    rep: &RepResult,
) -> Result<OperatorMatrix, RepError> {
    if x.sig() != &rep.sig {
        return Err(RepError::SignatureMismatch);
    }
    let mut out = OperatorMatrix::zeros(rep.spinor_dim);
    for (blade, coeff) in x.terms() {
        let image = blade_image(rep, blade)?;
        out = out.add(&image.scale(Complex64::new(coeff.to_f64(), 0.0)));
    }
    Ok(out)
}

/// Which side a regular-representation operator multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulSide {
    Left,
    Right,
}

/// Matrix of left or right multiplication by `z` in the blade basis (basis
/// blade with bit pattern `b` is basis vector number `b`).
pub fn regular_rep_matrix<R: SignedRing>(
    z: &Multivector<R>,
    side: MulSide,
) -> Result<OperatorMatrix, RepError> {
    let sig = z.sig();
    let k = sig.len();
    if k > MAX_REGULAR_REP_GENERATORS {
        return Err(RepError::RegularRepBound { requested: k });
    }
    let dim = sig.blade_count() as usize;
    let mut out = OperatorMatrix::zeros(dim);
    for (blade, coeff) in z.terms() {
        let scale = coeff.to_f64();
        let mut columns = Vec::with_capacity(dim);
        let mut values = Vec::with_capacity(dim);
        for col in 0..dim as u32 {
            let x = Blade::from_bits(col);
            let (sign, result) = match side {
                MulSide::Left => crate::algebra::blade_mul_unchecked(blade, x, sig),
                MulSide::Right => crate::algebra::blade_mul_unchecked(x, blade, sig),
            };
            // build by columns: row `result` in column `col`
            columns.push(result.bits());
            values.push(Complex64::new(sign.to_i8() as f64 * scale, 0.0));
        }
        // transpose the (column -> row) map into row-major entries
        let term = OperatorMatrix::from_triplets(
            dim,
            columns
                .iter()
                .zip(values.iter())
                .enumerate()
                .map(|(col, (&row, &val))| (row, col as u32, val)),
        );
        out = out.add(&term);
    }
    Ok(out)
}
