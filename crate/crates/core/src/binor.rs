//! Second-order classical logic over GF(2).
//!
//! A binor is a multivector with binary coefficients. Monomials are sharp
//! states (a complete description of one subset), polynomials are crisp
//! states (a list of possibilities), 1 is the empty set, and 0 is the
//! meaningless value. The logical product is the geometric product: the
//! generators are uniquadratic (each squares to 1) and commute with one
//! another because anticommutation is the same as commutation mod 2.
//!
//! Note that the product-based XOR sends `(0, A)` to `0`, while the additive
//! identity satisfies `0 + A = A`; the two zero laws belong to different
//! group structures (monomials under the product, everything under the sum)
//! and this module implements each operation by its algebraic definition.

use thiserror::Error;

use crate::algebra::{AlgebraError, Blade, Signature};
use crate::multivector::Multivector;
use crate::ring::Gf2;

/// A multivector over GF(2).
pub type Binor = Multivector<Gf2>;

/// Full-algebra enumeration bound: `2^20` terms is the desk-scale edge.
pub const FULL_STATE_MAX_GENERATORS: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BinorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("binor is not a monomial ({terms} terms)")]
    NotMonomial { terms: usize },
    #[error("full-algebra state over {requested} generators exceeds the bound of {FULL_STATE_MAX_GENERATORS}")]
    FullStateBoundExceeded { requested: u32 },
    #[error("boolean functions live on sample spaces of different sizes ({left} vs {right})")]
    SampleSpaceMismatch { left: usize, right: usize },
}

/// The grade-1 unit-set binor for generator `s`; it squares to 1.
pub fn iota_unit(sig: &Signature, s: u32) -> Result<Binor, BinorError> {
    Ok(Binor::generator(sig, s)?)
}

/// Logical XOR: the GF(2) geometric product.
pub fn binor_xor(a: &Binor, b: &Binor) -> Binor {
    a.gp(b)
}

/// Termwise addition mod 2. A zero result is a legal value meaning
/// "meaningless".
pub fn binor_sum(a: &Binor, b: &Binor) -> Binor {
    a + b
}

/// Supremum: the monomial terms present in either or both.
pub fn binor_sup(a: &Binor, b: &Binor) -> Binor {
    assert_eq!(a.sig(), b.sig(), "binors over different generator sets");
    let blades = a.support().chain(b.support()).map(|b| (b, Gf2::ONE));
    let mut out = Binor::zero(a.sig());
    for (blade, one) in blades {
        // union of supports, not mod-2 accumulation
        if out.coeff(blade).0 {
            continue;
        }
        out = &out + &Binor::from_blade(a.sig(), blade, one);
    }
    out
}

/// Infimum: the monomial terms present in both.
pub fn binor_inf(a: &Binor, b: &Binor) -> Binor {
    assert_eq!(a.sig(), b.sig(), "binors over different generator sets");
    let mut out = Binor::zero(a.sig());
    for blade in a.support() {
        if b.coeff(blade).0 {
            out = &out + &Binor::from_blade(a.sig(), blade, Gf2::ONE);
        }
    }
    out
}

/// The top state: the product of all generators.
pub fn top(sig: &Signature) -> Binor {
    Binor::from_blade(sig, Blade::from_bits(sig.full_mask()), Gf2::ONE)
}

/// Complementation: multiplication by the top state.
pub fn complement_top(a: &Binor) -> Binor {
    top(a.sig()).gp(a)
}

/// Logical XAND: top times XOR.
pub fn binor_xand(a: &Binor, b: &Binor) -> Binor {
    complement_top(&binor_xor(a, b))
}

/// The formal sum of all `2^N` monomials of the algebra, the expansion of
/// the product of `(1 + iota_unit(s))` over all generators.
pub fn full_algebra_state(sig: &Signature) -> Result<Binor, BinorError> {
    if sig.len() > FULL_STATE_MAX_GENERATORS {
        return Err(BinorError::FullStateBoundExceeded {
            requested: sig.len(),
        });
    }
    Ok(Binor::from_terms(
        sig,
        (0..sig.blade_count()).map(|bits| (Blade::from_bits(bits as u32), Gf2::ONE)),
    )?)
}

/// Grade of a sharp (monomial) state: the cardinality of the set it names.
pub fn monomial_grade(a: &Binor) -> Result<u32, BinorError> {
    let mut support = a.support();
    match (support.next(), support.next()) {
        (Some(blade), None) => Ok(blade.grade()),
        _ => Err(BinorError::NotMonomial {
            terms: a.term_count(),
        }),
    }
}

/// A truth-valued function on a finite sample space, one bit per point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolFn {
    values: Vec<bool>,
}

impl BoolFn {
    pub fn new(values: Vec<bool>) -> BoolFn {
        BoolFn { values }
    }

    pub fn constant(len: usize, value: bool) -> BoolFn {
        BoolFn {
            values: vec![value; len],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    fn zip(&self, other: &BoolFn, f: impl Fn(bool, bool) -> bool) -> BoolFn {
        BoolFn {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

/// The Boolean reference operations, pointwise over {0, 1} with arithmetic
/// mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOp {
    /// `sup(A, B)`.
    Or,
    /// `inf(A, B)`.
    And,
    /// `A + B`.
    Xor,
    /// `1 + A + B`.
    Xand,
    /// `A + B` if `A B` is identically zero, else the constant default 0.
    Por,
    /// `1 + A + B` if `A + B` is identically one, else the constant default 0.
    Pand,
}

/// Evaluates a Boolean reference operation. The partial operations POR and
/// PAND have global guards: when the guard fails over the whole sample space
/// they return the constant-0 default, which is what makes them not
/// truth-functional point by point.
pub fn bool_eval(op: BoolOp, a: &BoolFn, b: &BoolFn) -> Result<BoolFn, BinorError> {
    if a.len() != b.len() {
        return Err(BinorError::SampleSpaceMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let out = match op {
        BoolOp::Or => a.zip(b, |x, y| x | y),
        BoolOp::And => a.zip(b, |x, y| x & y),
        BoolOp::Xor => a.zip(b, |x, y| x ^ y),
        BoolOp::Xand => a.zip(b, |x, y| !(x ^ y)),
        BoolOp::Por => {
            let guard = a.values.iter().zip(&b.values).all(|(&x, &y)| !(x & y));
            if guard {
                a.zip(b, |x, y| x ^ y)
            } else {
                BoolFn::constant(a.len(), false)
            }
        }
        BoolOp::Pand => {
            let guard = a.values.iter().zip(&b.values).all(|(&x, &y)| x ^ y);
            if guard {
                a.zip(b, |x, y| !(x ^ y))
            } else {
                BoolFn::constant(a.len(), false)
            }
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sign;

    fn sig(k: u32) -> Signature {
        Signature::euclidean(k).unwrap()
    }

    fn gen(s: &Signature, i: u32) -> Binor {
        iota_unit(s, i).unwrap()
    }

    #[test]
    fn units_square_to_one_and_commute() {
        let s = sig(3);
        for i in 0..3 {
            let g = gen(&s, i);
            assert_eq!(binor_xor(&g, &g), Binor::one(&s));
            assert_eq!(monomial_grade(&g).unwrap(), 1);
        }
        let a = gen(&s, 0);
        let b = gen(&s, 1);
        assert_eq!(binor_xor(&a, &b), binor_xor(&b, &a));
    }

    #[test]
    fn negative_squares_collapse_mod_2() {
        let s = Signature::from_signs(&[Sign::Minus]).unwrap();
        let g = gen(&s, 0);
        assert_eq!(binor_xor(&g, &g), Binor::one(&s));
    }

    #[test]
    fn xor_zero_absorbs() {
        // 0 XOR A = 0 under the product definition (contrast with 0 + A = A)
        let s = sig(2);
        let a = gen(&s, 0);
        assert!(binor_xor(&Binor::zero(&s), &a).is_zero());
        assert_eq!(binor_sum(&Binor::zero(&s), &a), a);
    }

    #[test]
    fn xor_of_disjoint_monomials_concatenates() {
        let s = sig(3);
        let a = gen(&s, 0);
        let bc = binor_xor(&gen(&s, 1), &gen(&s, 2));
        let abc = binor_xor(&a, &bc);
        assert_eq!(monomial_grade(&abc).unwrap(), 3);
        assert_eq!(
            abc,
            Binor::from_blade(&s, Blade::from_indices(&[0, 1, 2]), Gf2::ONE)
        );
    }

    #[test]
    fn sum_laws() {
        let s = sig(2);
        let a = &gen(&s, 0) + &gen(&s, 1);
        assert!(binor_sum(&a, &a).is_zero());
        assert!(binor_sum(&Binor::one(&s), &Binor::one(&s)).is_zero());
        assert_eq!(binor_xor(&Binor::one(&s), &Binor::one(&s)), Binor::one(&s));
    }

    #[test]
    fn sup_inf() {
        let s = sig(3);
        let a = gen(&s, 0);
        let b = gen(&s, 1);
        let c = gen(&s, 2);
        let ab = &a + &b;
        let bc = &b + &c;
        assert_eq!(binor_inf(&ab, &bc), b);
        assert_eq!(binor_sup(&a, &b), ab);
        assert_eq!(binor_sup(&ab, &ab), ab);
        assert_eq!(binor_inf(&ab, &ab), ab);
    }

    #[test]
    fn complement_is_involutive() {
        let s = sig(4);
        assert_eq!(complement_top(&Binor::one(&s)), top(&s));
        let a = &(&gen(&s, 0) + &gen(&s, 2)) + &Binor::one(&s);
        assert_eq!(complement_top(&complement_top(&a)), a);
    }

    #[test]
    fn full_state_term_counts() {
        let s1 = sig(1);
        let full1 = full_algebra_state(&s1).unwrap();
        assert_eq!(full1, &Binor::one(&s1) + &gen(&s1, 0));

        let s2 = sig(2);
        let full2 = full_algebra_state(&s2).unwrap();
        let expected =
            Binor::from_terms(&s2, (0..4).map(|bits| (Blade::from_bits(bits), Gf2::ONE))).unwrap();
        assert_eq!(full2, expected);

        assert_eq!(full_algebra_state(&sig(10)).unwrap().term_count(), 1 << 10);
        assert!(matches!(
            full_algebra_state(&Signature::euclidean(21).unwrap()),
            Err(BinorError::FullStateBoundExceeded { requested: 21 })
        ));
    }

    #[test]
    fn full_state_is_product_of_unit_successors() {
        let s = sig(5);
        let mut product = Binor::one(&s);
        for i in 0..5 {
            let factor = &Binor::one(&s) + &gen(&s, i);
            product = product.gp(&factor);
        }
        assert_eq!(product, full_algebra_state(&s).unwrap());
    }

    #[test]
    fn monomial_grade_errors_on_crisp_states() {
        let s = sig(2);
        let crisp = &gen(&s, 0) + &gen(&s, 1);
        assert!(matches!(
            monomial_grade(&crisp),
            Err(BinorError::NotMonomial { terms: 2 })
        ));
        assert_eq!(monomial_grade(&Binor::one(&s)).unwrap(), 0);
    }

    #[test]
    fn bool_partial_ops() {
        let a = BoolFn::new(vec![true, false]);
        let b = BoolFn::new(vec![false, true]);
        assert_eq!(
            bool_eval(BoolOp::Por, &a, &b).unwrap(),
            BoolFn::new(vec![true, true])
        );
        assert_eq!(
            bool_eval(BoolOp::Pand, &a, &b).unwrap(),
            BoolFn::new(vec![false, false])
        );
        let c = BoolFn::new(vec![true, true]);
        let d = BoolFn::new(vec![true, false]);
        // guard AB = 0 fails: default 0
        assert_eq!(
            bool_eval(BoolOp::Por, &c, &d).unwrap(),
            BoolFn::constant(2, false)
        );
    }

    #[test]
    fn por_is_not_truth_functional() {
        // two pairs agreeing at point 0 whose POR results differ there
        let a = BoolFn::new(vec![true, false]);
        let b = BoolFn::new(vec![false, false]);
        let a2 = BoolFn::new(vec![true, true]);
        let b2 = BoolFn::new(vec![false, true]);
        assert_eq!(a.values()[0], a2.values()[0]);
        assert_eq!(b.values()[0], b2.values()[0]);
        let r1 = bool_eval(BoolOp::Por, &a, &b).unwrap();
        let r2 = bool_eval(BoolOp::Por, &a2, &b2).unwrap();
        assert_ne!(r1.values()[0], r2.values()[0]);
    }

    #[test]
    fn sample_space_mismatch() {
        let a = BoolFn::constant(2, true);
        let b = BoolFn::constant(3, true);
        assert!(matches!(
            bool_eval(BoolOp::Or, &a, &b),
            Err(BinorError::SampleSpaceMismatch { left: 2, right: 3 })
        ));
    }
}
