//! Coefficient rings for multivectors.
//!
//! The engine works over exactly three rings: the binary field GF(2), exact
//! rationals, and double-precision floats. All algebra code is generic over
//! the [`Ring`] trait; the concrete instantiations have type aliases at the
//! crate root.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Runtime identifier for the coefficient ring of a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingTag {
    /// The binary field {0, 1} with arithmetic mod 2.
    Gf2,
    /// Exact arbitrary-precision rationals.
    Rational,
    /// IEEE-754 double precision.
    Float64,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Gf2 => write!(f, "gf2"),
            RingTag::Rational => write!(f, "rational"),
            RingTag::Float64 => write!(f, "float64"),
        }
    }
}

/// A commutative unital coefficient ring.
///
/// Over GF(2) negation is the identity, which is how all the sign bookkeeping
/// of the Clifford product collapses in the binary case without any special
/// casing in the product kernels.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const TAG: RingTag;

    /// Canonical image of an integer in the ring.
    fn from_integer(n: i64) -> Self;
}

/// Rings with a meaningful sign, i.e. everything except GF(2).
///
/// Quadratic forms and matrix representations are only defined over these;
/// requiring the bound makes "norm over GF(2)" a compile-time error instead
/// of a runtime one.
pub trait SignedRing: Ring {
    /// Lossy conversion used when feeding exact coefficients to the float
    /// matrix kernels.
    fn to_f64(&self) -> f64;
}

/// An element of the binary field GF(2) = {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.0 { "1" } else { "0" })
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    // addition mod 2 is xor
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Sub for Gf2 {
    type Output = Gf2;
    // 1 = -1 mod 2, so subtraction is addition
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Gf2) -> Gf2 {
        self + rhs
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    // multiplication mod 2 is logical and
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Zero for Gf2 {
    fn zero() -> Gf2 {
        Gf2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Gf2 {
        Gf2(true)
    }
}

impl Ring for Gf2 {
    const TAG: RingTag = RingTag::Gf2;

    fn from_integer(n: i64) -> Gf2 {
        Gf2(n.rem_euclid(2) == 1)
    }
}

impl Ring for BigRational {
    const TAG: RingTag = RingTag::Rational;

    fn from_integer(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl SignedRing for BigRational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Ring for f64 {
    const TAG: RingTag = RingTag::Float64;

    fn from_integer(n: i64) -> f64 {
        n as f64
    }
}

impl SignedRing for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}
