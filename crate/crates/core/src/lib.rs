//! A Clifford-algebra computation engine.
//!
//! Exact multivector arithmetic over GF(2), the rationals and floats; the
//! second-order binor logic carried by the GF(2) algebra; the iterated
//! Clifford tower with signature verification; faithful matrix
//! representations with spectral computation; and a finite Dirac toy model
//! whose operators all have exactly computable, bounded spectra.

pub mod algebra;
pub mod binor;
pub mod dirac;
pub mod hierarchy;
pub mod matrix;
pub mod multivector;
pub mod rep;
pub mod ring;
pub mod spectrum;

pub use algebra::{
    blade_mul, blade_square_sign, AlgebraError, Blade, FourGroupElement, Sign, Signature,
    MAX_GENERATORS,
};
pub use multivector::Multivector;
pub use ring::{Gf2, Ring, RingTag, SignedRing};

/// Multivector over the binary field.
pub type Binor = binor::Binor;
/// Multivector over exact rationals.
pub type RationalMultivector = Multivector<num_rational::BigRational>;
/// Multivector over double-precision floats.
pub type FloatMultivector = Multivector<f64>;
