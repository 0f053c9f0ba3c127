//! Runtime-ring dispatch over the three multivector instantiations.

use cliffor::algebra::Signature;
use cliffor::ring::RingTag;
use cliffor::{Binor, FloatMultivector, RationalMultivector};
use serde_json::{json, Value};

use crate::expr::{self, ExprError};

/// A multivector whose coefficient ring was chosen at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum DynMultivector {
    Gf2(Binor),
    Rational(RationalMultivector),
    Float(FloatMultivector),
}

impl DynMultivector {
    pub fn ring(&self) -> RingTag {
        match self {
            DynMultivector::Gf2(_) => RingTag::Gf2,
            DynMultivector::Rational(_) => RingTag::Rational,
            DynMultivector::Float(_) => RingTag::Float64,
        }
    }

    pub fn canonical(&self) -> String {
        match self {
            DynMultivector::Gf2(mv) => mv.to_string(),
            DynMultivector::Rational(mv) => mv.to_string(),
            DynMultivector::Float(mv) => mv.to_string(),
        }
    }

    pub fn term_count(&self) -> usize {
        match self {
            DynMultivector::Gf2(mv) => mv.term_count(),
            DynMultivector::Rational(mv) => mv.term_count(),
            DynMultivector::Float(mv) => mv.term_count(),
        }
    }

    pub fn grades(&self) -> Vec<u32> {
        match self {
            DynMultivector::Gf2(mv) => mv.grades(),
            DynMultivector::Rational(mv) => mv.grades(),
            DynMultivector::Float(mv) => mv.grades(),
        }
    }

    /// Structured term list: generator indices are 1-based in the output.
    pub fn terms_json(&self) -> Value {
        fn blade_json(blade: cliffor::Blade) -> Value {
            Value::Array(blade.indices().map(|i| Value::from(i as u64 + 1)).collect())
        }
        match self {
            DynMultivector::Gf2(mv) => Value::Array(
                mv.terms()
                    .map(|(b, c)| json!({"blade": blade_json(b), "coeff": c.to_string()}))
                    .collect(),
            ),
            DynMultivector::Rational(mv) => Value::Array(
                mv.terms()
                    .map(|(b, c)| json!({"blade": blade_json(b), "coeff": c.to_string()}))
                    .collect(),
            ),
            DynMultivector::Float(mv) => Value::Array(
                mv.terms()
                    .map(|(b, c)| json!({"blade": blade_json(b), "coeff": c}))
                    .collect(),
            ),
        }
    }
}

/// Parses an expression under a runtime-chosen ring.
pub fn parse_dyn(text: &str, ring: RingTag, sig: &Signature) -> Result<DynMultivector, ExprError> {
    let expr = expr::parse(text, ring, sig)?;
    Ok(match ring {
        RingTag::Gf2 => DynMultivector::Gf2(expr::eval(&expr, sig)),
        RingTag::Rational => DynMultivector::Rational(expr::eval(&expr, sig)),
        RingTag::Float64 => DynMultivector::Float(expr::eval(&expr, sig)),
    })
}
