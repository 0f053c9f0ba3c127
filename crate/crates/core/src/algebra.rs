//! Generator signatures, basis blades and the blade product kernel.
//!
//! A blade is a basis monomial of generators encoded as a bit set: bit `i`
//! set means generator `i` is a factor. The product of two blades is the
//! symmetric difference of the sets with a sign from anticommutation
//! bookkeeping and from contracting repeated generators by their metric
//! square.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on generator counts; keeps blade masks inside a `u32` and every
/// full-algebra enumeration at desk scale.
pub const MAX_GENERATORS: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("generator index {index} out of range for signature of length {len}")]
    IndexOutOfRange { index: u32, len: u32 },
    #[error("{requested} generators requested, at most {MAX_GENERATORS} supported")]
    TooManyGenerators { requested: u64 },
}

/// Sign of a unit, +1 or -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn compose(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// Applies the sign to a ring element. Over GF(2) negation is the
    /// identity, so all signs collapse there.
    pub fn apply<R: crate::ring::Ring>(self, value: R) -> R {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+" } else { "-" })
    }
}

/// The diagonal generator metric of a Clifford algebra: one square (+1 or -1)
/// per generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    len: u32,
    /// Bit `i` set means generator `i` squares to -1.
    neg_mask: u32,
}

impl Signature {
    /// The empty signature (zero generators; the algebra of plain scalars).
    pub fn empty() -> Signature {
        Signature {
            len: 0,
            neg_mask: 0,
        }
    }

    /// `k` generators all squaring to +1.
    pub fn euclidean(k: u32) -> Result<Signature, AlgebraError> {
        Signature::from_signs_iter((0..k).map(|_| Sign::Plus))
    }

    /// Signature from an explicit list of generator squares.
    pub fn from_signs(signs: &[Sign]) -> Result<Signature, AlgebraError> {
        Signature::from_signs_iter(signs.iter().copied())
    }

    pub fn from_signs_iter(
        signs: impl IntoIterator<Item = Sign>,
    ) -> Result<Signature, AlgebraError> {
        let mut len = 0u64;
        let mut neg_mask = 0u32;
        for sign in signs {
            if len >= MAX_GENERATORS as u64 {
                len += 1;
                continue;
            }
            if sign == Sign::Minus {
                neg_mask |= 1 << len;
            }
            len += 1;
        }
        if len > MAX_GENERATORS as u64 {
            return Err(AlgebraError::TooManyGenerators { requested: len });
        }
        Ok(Signature {
            len: len as u32,
            neg_mask,
        })
    }

    /// `n_plus` generators squaring +1 followed by `n_minus` squaring -1.
    pub fn from_counts(n_plus: u64, n_minus: u64) -> Result<Signature, AlgebraError> {
        let total = n_plus + n_minus;
        if total > MAX_GENERATORS as u64 {
            return Err(AlgebraError::TooManyGenerators { requested: total });
        }
        Signature::from_signs_iter(
            (0..n_plus)
                .map(|_| Sign::Plus)
                .chain((0..n_minus).map(|_| Sign::Minus)),
        )
    }

    /// Concatenation: `self`'s generators followed by `other`'s.
    pub fn concat(&self, other: &Signature) -> Result<Signature, AlgebraError> {
        Signature::from_signs_iter(self.signs().chain(other.signs()))
    }

    /// Generator count `k`.
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of basis blades, `2^k`.
    pub fn blade_count(&self) -> u64 {
        1u64 << self.len
    }

    pub fn count_plus(&self) -> u32 {
        self.len - self.count_minus()
    }

    pub fn count_minus(&self) -> u32 {
        self.neg_mask.count_ones()
    }

    /// Square of generator `i`.
    pub fn square(&self, i: u32) -> Result<Sign, AlgebraError> {
        if i >= self.len {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                len: self.len,
            });
        }
        Ok(Sign::from_parity(self.neg_mask >> i & 1 == 1))
    }

    pub fn signs(&self) -> impl Iterator<Item = Sign> + '_ {
        (0..self.len).map(|i| Sign::from_parity(self.neg_mask >> i & 1 == 1))
    }

    /// Mask of negative-square generators.
    pub fn neg_mask(&self) -> u32 {
        self.neg_mask
    }

    /// Mask covering every generator.
    pub fn full_mask(&self) -> u32 {
        if self.len == 0 {
            0
        } else {
            u32::MAX >> (32 - self.len)
        }
    }

    pub fn contains_blade(&self, blade: Blade) -> bool {
        blade.bits() & !self.full_mask() == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for sign in self.signs() {
            write!(f, "{sign}")?;
        }
        Ok(())
    }
}

/// A basis monomial: the set of generator indices it contains, in canonical
/// ascending order. `Blade(0)` is the scalar unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u32) -> Blade {
        Blade(bits)
    }

    /// Blade with a single generator.
    pub fn generator(i: u32) -> Blade {
        Blade(1 << i)
    }

    pub fn from_indices(indices: &[u32]) -> Blade {
        let mut bits = 0;
        for &i in indices {
            bits |= 1 << i;
        }
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// Number of generator factors.
    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, generator: u32) -> bool {
        self.0 >> generator & 1 == 1
    }

    pub fn indices(self) -> impl Iterator<Item = u32> {
        let bits = self.0;
        (0..32).filter(move |i| bits >> i & 1 == 1)
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }
}

/// Parity of the transposition count needed to interleave the generators of
/// `b` past those of `a` (pairs `i in a`, `j in b` with `i > j`).
fn reorder_swaps_odd(a: u32, b: u32) -> bool {
    let mut shifted = a >> 1;
    let mut swaps = 0u32;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    swaps & 1 == 1
}

/// Product of two basis blades under a signature.
///
/// Returns the sign picked up from reordering and from contracting the shared
/// generators by their squares, together with the resulting blade (the
/// symmetric difference of the two index sets).
pub fn blade_mul(a: Blade, b: Blade, sig: &Signature) -> Result<(Sign, Blade), AlgebraError> {
    let mask = sig.full_mask();
    for blade in [a, b] {
        if blade.bits() & !mask != 0 {
            let index = (blade.bits() & !mask).trailing_zeros();
            return Err(AlgebraError::IndexOutOfRange {
                index,
                len: sig.len(),
            });
        }
    }
    Ok(blade_mul_unchecked(a, b, sig))
}

/// As [`blade_mul`] but assumes both blades fit the signature.
pub fn blade_mul_unchecked(a: Blade, b: Blade, sig: &Signature) -> (Sign, Blade) {
    let mut odd = reorder_swaps_odd(a.bits(), b.bits());
    let shared_negatives = a.bits() & b.bits() & sig.neg_mask();
    odd ^= shared_negatives.count_ones() & 1 == 1;
    (Sign::from_parity(odd), Blade(a.bits() ^ b.bits()))
}

/// Sign of the square of a blade: `(-1)^(g(g-1)/2)` from reordering times the
/// product of the squares of its generators.
pub fn blade_square_sign(blade: Blade, sig: &Signature) -> Sign {
    let g = blade.grade();
    let reorder_odd = (g * g.wrapping_sub(1) / 2) & 1 == 1;
    let metric_odd = (blade.bits() & sig.neg_mask()).count_ones() & 1 == 1;
    Sign::from_parity(reorder_odd ^ metric_odd)
}

/// The four-group of natural (anti-)automorphisms of a Clifford algebra:
/// identity, transposition, conjugation, and their composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FourGroupElement {
    /// Identity.
    I,
    /// Transposition: the anti-automorphism fixing grade-1 elements.
    T,
    /// Conjugation: the automorphism negating grade-1 elements.
    C,
    /// `T` composed with `C`: the anti-automorphism negating grade-1 elements.
    H,
}

impl FourGroupElement {
    pub const ALL: [FourGroupElement; 4] = [
        FourGroupElement::I,
        FourGroupElement::T,
        FourGroupElement::C,
        FourGroupElement::H,
    ];

    /// Per-blade action on a blade of the given grade.
    ///
    /// `T` contributes `(-1)^(g(g-1)/2)` (reversal of the factor order),
    /// `C` contributes `(-1)^g`, and `H` their product `(-1)^(g(g+1)/2)`.
    pub fn grade_sign(self, grade: u32) -> Sign {
        let g = grade;
        let odd = match self {
            FourGroupElement::I => false,
            FourGroupElement::T => (g * g.wrapping_sub(1) / 2) & 1 == 1,
            FourGroupElement::C => g & 1 == 1,
            FourGroupElement::H => (g * (g + 1) / 2) & 1 == 1,
        };
        Sign::from_parity(odd)
    }

    /// Group composition; every element is its own inverse.
    pub fn compose(self, other: FourGroupElement) -> FourGroupElement {
        use FourGroupElement::*;
        match (self, other) {
            (I, x) | (x, I) => x,
            (a, b) if a == b => I,
            (T, C) | (C, T) => H,
            (T, H) | (H, T) => C,
            (C, H) | (H, C) => T,
            _ => unreachable!(),
        }
    }

    /// Whether the map reverses products (`T` and `H`) or preserves them
    /// (`I` and `C`).
    pub fn is_antiautomorphism(self) -> bool {
        matches!(self, FourGroupElement::T | FourGroupElement::H)
    }
}

impl fmt::Display for FourGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FourGroupElement::I => "I",
            FourGroupElement::T => "T",
            FourGroupElement::C => "C",
            FourGroupElement::H => "H",
        };
        write!(f, "{s}")
    }
}
