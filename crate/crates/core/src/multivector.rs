//! Sparse multivectors over a pluggable coefficient ring.
//!
//! A multivector is a map from basis blades to nonzero coefficients, kept in
//! canonical sparse form: inserting a zero removes the term. Two multivectors
//! are equal iff their signatures and term maps are equal, so every identity
//! test in the exact rings is a plain `==`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{blade_mul_unchecked, AlgebraError, Blade, FourGroupElement, Signature};
use crate::ring::{Ring, SignedRing};

/// An element of the Clifford algebra over signature `sig` with coefficients
/// in `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<R: Ring> {
    sig: Signature,
    terms: BTreeMap<Blade, R>,
}

impl<R: Ring> Multivector<R> {
    /// The zero element.
    pub fn zero(sig: &Signature) -> Self {
        Multivector {
            sig: sig.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A scalar (empty-blade) element.
    pub fn scalar(sig: &Signature, value: R) -> Self {
        let mut mv = Multivector::zero(sig);
        mv.add_term(Blade::SCALAR, value);
        mv
    }

    /// The multiplicative unit.
    pub fn one(sig: &Signature) -> Self {
        Multivector::scalar(sig, R::one())
    }

    /// The grade-1 basis element for generator `i`.
    pub fn generator(sig: &Signature, i: u32) -> Result<Self, AlgebraError> {
        if i >= sig.len() {
            return Err(AlgebraError::IndexOutOfRange {
                index: i,
                len: sig.len(),
            });
        }
        Ok(Multivector::from_blade(sig, Blade::generator(i), R::one()))
    }

    /// A single term `value * blade`.
    pub fn from_blade(sig: &Signature, blade: Blade, value: R) -> Self {
        let mut mv = Multivector::zero(sig);
        mv.add_term(blade, value);
        mv
    }

    /// Builds a multivector from terms, accumulating duplicates and dropping
    /// zeros. Blades outside the signature are rejected.
    pub fn from_terms(
        sig: &Signature,
        terms: impl IntoIterator<Item = (Blade, R)>,
    ) -> Result<Self, AlgebraError> {
        let mut mv = Multivector::zero(sig);
        for (blade, value) in terms {
            if !sig.contains_blade(blade) {
                return Err(AlgebraError::IndexOutOfRange {
                    index: blade.bits().trailing_zeros().max(sig.len()),
                    len: sig.len(),
                });
            }
            mv.add_term(blade, value);
        }
        Ok(mv)
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order (blades ascending by bit pattern).
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &R)> {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    /// Coefficient of a blade (zero if absent).
    pub fn coeff(&self, blade: Blade) -> R {
        self.terms.get(&blade).cloned().unwrap_or_else(R::zero)
    }

    /// The set of blades with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = Blade> + '_ {
        self.terms.keys().copied()
    }

    /// True if the multivector is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the empty blade.
    pub fn scalar_part(&self) -> R {
        self.coeff(Blade::SCALAR)
    }

    /// Keeps exactly the terms of the given grade.
    pub fn grade_project(&self, grade: u32) -> Self {
        Multivector {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == grade)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// The grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut grades: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        grades.sort_unstable();
        grades.dedup();
        grades
    }

    /// Geometric product. Both operands must share a signature.
    pub fn gp(&self, other: &Self) -> Self {
        assert_eq!(
            self.sig, other.sig,
            "geometric product of multivectors over different signatures"
        );
        let mut out = Multivector::zero(&self.sig);
        for (b1, c1) in &self.terms {
            for (b2, c2) in &other.terms {
                let (sign, blade) = blade_mul_unchecked(*b1, *b2, &self.sig);
                out.add_term(blade, sign.apply(c1.clone() * c2.clone()));
            }
        }
        out
    }

    /// Applies a four-group element blade-wise.
    pub fn involution(&self, g: FourGroupElement) -> Self {
        Multivector {
            sig: self.sig.clone(),
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, g.grade_sign(b.grade()).apply(c.clone())))
                .collect(),
        }
    }

    /// Multiplies every coefficient by a scalar.
    pub fn scale(&self, factor: &R) -> Self {
        if factor.is_zero() {
            return Multivector::zero(&self.sig);
        }
        let mut out = Multivector::zero(&self.sig);
        for (b, c) in &self.terms {
            out.add_term(*b, factor.clone() * c.clone());
        }
        out
    }

    /// Canonical sparse sum of scaled multivectors. All operands must share a
    /// signature (the signature of an empty combination is unconstrained, so
    /// at least one operand is required).
    pub fn linear_combine<'a>(
        pairs: impl IntoIterator<Item = (R, &'a Multivector<R>)>,
    ) -> Option<Self>
    where
        R: 'a,
    {
        let mut out: Option<Multivector<R>> = None;
        for (factor, mv) in pairs {
            let out = out.get_or_insert_with(|| Multivector::zero(&mv.sig));
            assert_eq!(
                out.sig, mv.sig,
                "linear combination of multivectors over different signatures"
            );
            for (b, c) in &mv.terms {
                out.add_term(*b, factor.clone() * c.clone());
            }
        }
        out
    }

    fn add_term(&mut self, blade: Blade, value: R) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

impl<R: SignedRing> Multivector<R> {
    /// The quadratic form `Re(x^g x)` attached to a four-group element.
    ///
    /// `g = I` gives the natural norm used to iterate the hierarchy.
    pub fn norm_form(&self, g: FourGroupElement) -> R {
        self.involution(g).gp(self).scalar_part()
    }
}

impl<R: Ring> Add for &Multivector<R> {
    type Output = Multivector<R>;

    fn add(self, rhs: &Multivector<R>) -> Multivector<R> {
        assert_eq!(
            self.sig, rhs.sig,
            "sum of multivectors over different signatures"
        );
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, c.clone());
        }
        out
    }
}

impl<R: Ring> Sub for &Multivector<R> {
    type Output = Multivector<R>;

    fn sub(self, rhs: &Multivector<R>) -> Multivector<R> {
        assert_eq!(
            self.sig, rhs.sig,
            "difference of multivectors over different signatures"
        );
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(*b, -c.clone());
        }
        out
    }
}

impl<R: Ring> Neg for &Multivector<R> {
    type Output = Multivector<R>;

    fn neg(self) -> Multivector<R> {
        Multivector {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(b, c)| (*b, -c.clone())).collect(),
        }
    }
}

/// Canonical text form: terms ascending by blade bit pattern, generators
/// named `e1..`, coefficient 1 elided on non-scalar blades. This is the
/// printer half of the round-trip contract with the expression parser.
impl<R: Ring> fmt::Display for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let one = R::one();
        let minus_one = -R::one();
        for (i, (blade, coeff)) in self.terms.iter().enumerate() {
            let blade_str = blade_name(*blade);
            let coeff_str = if blade.is_scalar() {
                format!("{coeff}")
            } else if *coeff == one {
                blade_str.clone()
            } else if *coeff != minus_one || one == minus_one {
                format!("{coeff}*{blade_str}")
            } else {
                format!("-{blade_str}")
            };
            if i == 0 {
                write!(f, "{coeff_str}")?;
            } else if let Some(stripped) = coeff_str.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {coeff_str}")?;
            }
        }
        Ok(())
    }
}

/// `e1*e2*...` name of a blade (1-based generator names), `1` for the scalar.
pub fn blade_name(blade: Blade) -> String {
    if blade.is_scalar() {
        return "1".to_string();
    }
    blade
        .indices()
        .map(|i| format!("e{}", i + 1))
        .collect::<Vec<_>>()
        .join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sign;
    use crate::ring::Gf2;
    use num_rational::BigRational;

    type Q = BigRational;

    fn rat(n: i64) -> Q {
        <Q as Ring>::from_integer(n)
    }

    fn sig(pattern: &str) -> Signature {
        Signature::from_signs_iter(pattern.chars().map(|c| match c {
            '+' => Sign::Plus,
            '-' => Sign::Minus,
            _ => panic!("bad pattern"),
        }))
        .unwrap()
    }

    #[test]
    fn unit_law() {
        let s = sig("++");
        let x = Multivector::from_terms(
            &s,
            [
                (Blade::SCALAR, rat(2)),
                (Blade::generator(0), rat(-1)),
                (Blade::from_indices(&[0, 1]), rat(5)),
            ],
        )
        .unwrap();
        assert_eq!(Multivector::one(&s).gp(&x), x);
        assert_eq!(x.gp(&Multivector::one(&s)), x);
    }

    #[test]
    fn vector_square_is_scalar() {
        // (e0 + e1)^2 = 2 when both squares are +1
        let s = sig("++");
        let v =
            &Multivector::<Q>::generator(&s, 0).unwrap() + &Multivector::generator(&s, 1).unwrap();
        assert_eq!(v.gp(&v), Multivector::scalar(&s, rat(2)));
    }

    #[test]
    fn gf2_square_collapses() {
        let s = sig("++");
        let v = &Multivector::<Gf2>::generator(&s, 0).unwrap()
            + &Multivector::generator(&s, 1).unwrap();
        assert!(v.gp(&v).is_zero());
    }

    #[test]
    fn cancellation_keeps_canonical_form() {
        let s = sig("+");
        let x = Multivector::<Q>::generator(&s, 0).unwrap();
        let zero = &x - &x;
        assert!(zero.is_zero());
        assert_eq!(zero.term_count(), 0);
        let combined = Multivector::linear_combine([(rat(1), &x), (rat(-1), &x)]).unwrap();
        assert!(combined.is_zero());
    }

    #[test]
    fn involution_examples() {
        let s = sig("++");
        let e0 = Multivector::<Q>::generator(&s, 0).unwrap();
        assert_eq!(e0.involution(FourGroupElement::T), e0);
        assert_eq!(e0.involution(FourGroupElement::C), -&e0);
        assert_eq!(e0.involution(FourGroupElement::H), -&e0);
        // T(e0 e1) = e1 e0 = -e0 e1
        let e01 = Multivector::from_blade(&s, Blade::from_indices(&[0, 1]), rat(1));
        assert_eq!(e01.involution(FourGroupElement::T), -&e01);
        for g in FourGroupElement::ALL {
            let x = Multivector::from_terms(
                &s,
                [
                    (Blade::SCALAR, rat(3)),
                    (Blade::generator(1), rat(2)),
                    (Blade::from_indices(&[0, 1]), rat(-7)),
                ],
            )
            .unwrap();
            assert_eq!(x.involution(g).involution(g), x, "{g} must be involutive");
        }
    }

    #[test]
    fn scalar_part_examples() {
        let s = sig("++");
        let x =
            Multivector::from_terms(&s, [(Blade::SCALAR, rat(3)), (Blade::generator(0), rat(1))])
                .unwrap();
        assert_eq!(x.scalar_part(), rat(3));
        let e01 = Multivector::<Q>::from_blade(&s, Blade::from_indices(&[0, 1]), rat(1));
        assert_eq!(e01.scalar_part(), rat(0));
    }

    #[test]
    fn norm_forms_on_complex_plane() {
        // one generator squaring -1: the algebra is the complex numbers
        let s = sig("-");
        let i = Multivector::<Q>::generator(&s, 0).unwrap();
        assert_eq!(i.norm_form(FourGroupElement::I), rat(-1));
        assert_eq!(i.norm_form(FourGroupElement::H), rat(1));
        let one_plus_i = &Multivector::one(&s) + &i;
        assert_eq!(one_plus_i.norm_form(FourGroupElement::I), rat(0));
    }

    #[test]
    fn grade_projection() {
        let s = sig("++");
        let x = Multivector::from_terms(
            &s,
            [
                (Blade::SCALAR, rat(1)),
                (Blade::generator(0), rat(1)),
                (Blade::from_indices(&[0, 1]), rat(1)),
            ],
        )
        .unwrap();
        assert_eq!(x.grade_project(1), Multivector::generator(&s, 0).unwrap());
        let mut acc = Multivector::zero(&s);
        for g in 0..=s.len() {
            acc = &acc + &x.grade_project(g);
        }
        assert_eq!(acc, x);
        assert_eq!(x.grades(), vec![0, 1, 2]);
    }

    #[test]
    fn display_canonical() {
        let s = sig("+++");
        assert_eq!(Multivector::<Q>::zero(&s).to_string(), "0");
        assert_eq!(Multivector::<Q>::one(&s).to_string(), "1");
        let x = Multivector::from_terms(
            &s,
            [
                (Blade::SCALAR, rat(2)),
                (Blade::generator(0), rat(-1)),
                (
                    Blade::from_indices(&[0, 2]),
                    BigRational::new(3.into(), 4.into()),
                ),
            ],
        )
        .unwrap();
        assert_eq!(x.to_string(), "2 - e1 + 3/4*e1*e3");
    }
}
