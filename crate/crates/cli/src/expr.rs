//! Clifford-expression parser and evaluator.
//!
//! Grammar (standard precedence, `*` over `+`/`-`, unary minus tightest):
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | primary
//! primary := number | generator | call | '(' expr ')'
//! call    := ('T' | 'C' | 'H' | 'Re') '(' expr ')'
//!          | 'grade' '(' expr ',' INT ')'
//!          | 'top' '(' ')'
//! number  := INT ('/' INT)? | DECIMAL
//! ```
//!
//! Generators are `e1..e24`; over GF(2) single letters `a..z` also name
//! `e1..e26`, capped at the signature size. Literal forms are ring-checked:
//! GF(2) takes integers only (mod 2), the exact ring takes integers,
//! fractions and decimals (exactly), floats take all three.

use std::fmt;

use cliffor::algebra::{Blade, FourGroupElement, Signature};
use cliffor::multivector::Multivector;
use cliffor::ring::{Gf2, Ring, RingTag};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

/// Inputs past this length are rejected before lexing.
pub const MAX_INPUT_BYTES: usize = 64 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExprErrorKind {
    Syntax,
    UnknownGenerator,
    RingViolation,
    InputTooLong,
}

/// A structured parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExprError {
    pub kind: ExprErrorKind,
    pub line: u32,
    pub column: u32,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ExprError {}

/// Parsed syntax tree. Literals stay as digit strings so each ring converts
/// them exactly.
#[derive(Debug, Clone, PartialEq)]
pub enum Expression {
    Integer(String),
    Ratio(String, String),
    Decimal(String),
    Generator(u32),
    Top,
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Involution(FourGroupElement, Box<Expression>),
    ScalarPart(Box<Expression>),
    GradeProject(Box<Expression>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(String),
    Dec(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: u32,
    column: u32,
}

fn err(kind: ExprErrorKind, line: u32, column: u32, message: impl Into<String>) -> ExprError {
    ExprError {
        kind,
        line,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<Spanned>, ExprError> {
    let mut tokens = Vec::new();
    let mut line = 1u32;
    let mut column = 1u32;
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let ch = chars.next().unwrap();
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            ch
        };
        match ch {
            ' ' | '\t' | '\r' | '\n' => {
                bump(&mut chars);
            }
            '+' | '-' | '*' | '/' | '(' | ')' | ',' => {
                bump(&mut chars);
                let token = match ch {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    _ => Token::Comma,
                };
                tokens.push(Spanned {
                    token,
                    line: l,
                    column: c,
                });
            }
            '0'..='9' => {
                let mut digits = String::new();
                while matches!(chars.peek(), Some('0'..='9')) {
                    digits.push(bump(&mut chars));
                }
                if chars.peek() == Some(&'.') {
                    bump(&mut chars);
                    let mut frac = String::new();
                    while matches!(chars.peek(), Some('0'..='9')) {
                        frac.push(bump(&mut chars));
                    }
                    if frac.is_empty() {
                        return Err(err(
                            ExprErrorKind::Syntax,
                            l,
                            c,
                            "decimal literal needs digits after the point",
                        ));
                    }
                    tokens.push(Spanned {
                        token: Token::Dec(format!("{digits}.{frac}")),
                        line: l,
                        column: c,
                    });
                } else {
                    tokens.push(Spanned {
                        token: Token::Int(digits),
                        line: l,
                        column: c,
                    });
                }
            }
            'a'..='z' | 'A'..='Z' => {
                let mut ident = String::new();
                while matches!(chars.peek(), Some('a'..='z' | 'A'..='Z' | '0'..='9' | '_')) {
                    ident.push(bump(&mut chars));
                }
                tokens.push(Spanned {
                    token: Token::Ident(ident),
                    line: l,
                    column: c,
                });
            }
            '.' => {
                return Err(err(
                    ExprErrorKind::Syntax,
                    l,
                    c,
                    "decimal literal needs digits before the point",
                ));
            }
            other => {
                return Err(err(
                    ExprErrorKind::Syntax,
                    l,
                    c,
                    format!("unexpected character {other:?}"),
                ));
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Spanned>,
    pos: usize,
    ring: RingTag,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (u32, u32) {
        self.tokens
            .get(self.pos)
            .or_else(|| self.tokens.last())
            .map(|s| (s.line, s.column))
            .unwrap_or((1, 1))
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<(), ExprError> {
        let (line, column) = self.here();
        match self.next() {
            Some(s) if &s.token == want => Ok(()),
            _ => Err(err(
                ExprErrorKind::Syntax,
                line,
                column,
                format!("expected {what}"),
            )),
        }
    }

    fn expr(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.term()?;
        while let Some(s) = self.peek() {
            match s.token {
                Token::Plus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expression::Add(Box::new(lhs), Box::new(rhs));
                }
                Token::Minus => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    lhs = Expression::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => break,
            }
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expression, ExprError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek().map(|s| &s.token), Some(Token::Star)) {
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expression::Mul(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expression, ExprError> {
        if matches!(self.peek().map(|s| &s.token), Some(Token::Minus)) {
            self.pos += 1;
            let inner = self.unary()?;
            return Ok(Expression::Neg(Box::new(inner)));
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Expression, ExprError> {
        let (line, column) = self.here();
        let spanned = self.next().ok_or_else(|| {
            err(
                ExprErrorKind::Syntax,
                line,
                column,
                "unexpected end of input",
            )
        })?;
        match spanned.token {
            Token::Int(digits) => self.number(digits, line, column),
            Token::Dec(text) => {
                if self.ring == RingTag::Gf2 {
                    return Err(err(
                        ExprErrorKind::RingViolation,
                        line,
                        column,
                        "decimal literals are not valid over gf2",
                    ));
                }
                Ok(Expression::Decimal(text))
            }
            Token::Ident(name) => self.ident(name, line, column),
            Token::LParen => {
                let inner = self.expr()?;
                self.expect(&Token::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            _ => Err(err(
                ExprErrorKind::Syntax,
                line,
                column,
                "expected a literal, generator or parenthesized expression",
            )),
        }
    }

    fn number(&mut self, digits: String, line: u32, column: u32) -> Result<Expression, ExprError> {
        if matches!(self.peek().map(|s| &s.token), Some(Token::Slash)) {
            self.pos += 1;
            let (dl, dc) = self.here();
            let den = match self.next() {
                Some(Spanned {
                    token: Token::Int(d),
                    ..
                }) => d,
                _ => {
                    return Err(err(
                        ExprErrorKind::Syntax,
                        dl,
                        dc,
                        "expected an integer denominator",
                    ))
                }
            };
            if self.ring == RingTag::Gf2 {
                return Err(err(
                    ExprErrorKind::RingViolation,
                    line,
                    column,
                    "fraction literals are not valid over gf2",
                ));
            }
            if den.chars().all(|c| c == '0') {
                return Err(err(ExprErrorKind::Syntax, dl, dc, "zero denominator"));
            }
            return Ok(Expression::Ratio(digits, den));
        }
        Ok(Expression::Integer(digits))
    }

    fn ident(&mut self, name: String, line: u32, column: u32) -> Result<Expression, ExprError> {
        let calls = matches!(self.peek().map(|s| &s.token), Some(Token::LParen));
        if calls {
            let involution = match name.as_str() {
                "T" => Some(FourGroupElement::T),
                "C" => Some(FourGroupElement::C),
                "H" => Some(FourGroupElement::H),
                _ => None,
            };
            if let Some(g) = involution {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(&Token::RParen, "closing parenthesis")?;
                return Ok(Expression::Involution(g, Box::new(inner)));
            }
            match name.as_str() {
                "Re" => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(&Token::RParen, "closing parenthesis")?;
                    Ok(Expression::ScalarPart(Box::new(inner)))
                }
                "grade" => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(&Token::Comma, "comma before the grade")?;
                    let (gl, gc) = self.here();
                    let grade = match self.next() {
                        Some(Spanned {
                            token: Token::Int(d),
                            ..
                        }) => d.parse::<u32>().map_err(|_| {
                            err(ExprErrorKind::Syntax, gl, gc, "grade out of range")
                        })?,
                        _ => {
                            return Err(err(
                                ExprErrorKind::Syntax,
                                gl,
                                gc,
                                "expected an integer grade",
                            ))
                        }
                    };
                    self.expect(&Token::RParen, "closing parenthesis")?;
                    Ok(Expression::GradeProject(Box::new(inner), grade))
                }
                "top" => {
                    self.pos += 1;
                    self.expect(&Token::RParen, "closing parenthesis")?;
                    Ok(Expression::Top)
                }
                other => Err(err(
                    ExprErrorKind::Syntax,
                    line,
                    column,
                    format!("unknown function {other:?}"),
                )),
            }
        } else {
            self.generator(&name, line, column)
        }
    }

    fn generator(&self, name: &str, line: u32, column: u32) -> Result<Expression, ExprError> {
        let k = self.sig.len();
        if let Some(rest) = name.strip_prefix('e') {
            if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) {
                let number: u32 = rest.parse().map_err(|_| {
                    err(
                        ExprErrorKind::UnknownGenerator,
                        line,
                        column,
                        "generator number out of range",
                    )
                })?;
                if number == 0 || number > k {
                    return Err(err(
                        ExprErrorKind::UnknownGenerator,
                        line,
                        column,
                        format!("generator e{number} outside the signature (e1..e{k})"),
                    ));
                }
                return Ok(Expression::Generator(number - 1));
            }
        }
        let mut letters = name.chars();
        match (letters.next(), letters.next()) {
            (Some(letter @ 'a'..='z'), None) => {
                if self.ring != RingTag::Gf2 {
                    return Err(err(
                        ExprErrorKind::UnknownGenerator,
                        line,
                        column,
                        format!("single-letter generator {letter:?} is only valid over gf2; use e1..e{k}"),
                    ));
                }
                let index = letter as u32 - 'a' as u32;
                if index >= k {
                    return Err(err(
                        ExprErrorKind::UnknownGenerator,
                        line,
                        column,
                        format!(
                            "letter {letter:?} maps to e{} beyond the signature (e1..e{k})",
                            index + 1
                        ),
                    ));
                }
                Ok(Expression::Generator(index))
            }
            _ => Err(err(
                ExprErrorKind::UnknownGenerator,
                line,
                column,
                format!("unknown symbol {name:?}"),
            )),
        }
    }
}

/// Parses and ring-checks an expression against a signature.
pub fn parse(text: &str, ring: RingTag, sig: &Signature) -> Result<Expression, ExprError> {
    if text.len() > MAX_INPUT_BYTES {
        return Err(err(
            ExprErrorKind::InputTooLong,
            1,
            1,
            format!(
                "input of {} bytes exceeds the {MAX_INPUT_BYTES}-byte limit",
                text.len()
            ),
        ));
    }
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
        sig,
    };
    let expr = parser.expr()?;
    if let Some(extra) = parser.peek() {
        return Err(err(
            ExprErrorKind::Syntax,
            extra.line,
            extra.column,
            "trailing input after the expression",
        ));
    }
    Ok(expr)
}

/// Ring-specific conversion of validated literal strings.
pub trait EvalCoeff: Ring {
    fn integer(digits: &str) -> Self;
    fn ratio(num: &str, den: &str) -> Self;
    fn decimal(text: &str) -> Self;
}

impl EvalCoeff for Gf2 {
    fn integer(digits: &str) -> Self {
        // parity of a digit string is the parity of its last digit
        match digits.bytes().last() {
            Some(d) => Gf2((d - b'0') % 2 == 1),
            None => Gf2::ZERO,
        }
    }

    fn ratio(_num: &str, _den: &str) -> Self {
        unreachable!("fraction literals are rejected over gf2 at parse time")
    }

    fn decimal(_text: &str) -> Self {
        unreachable!("decimal literals are rejected over gf2 at parse time")
    }
}

impl EvalCoeff for BigRational {
    fn integer(digits: &str) -> Self {
        BigRational::from_integer(digits.parse::<BigInt>().expect("lexed digits"))
    }

    fn ratio(num: &str, den: &str) -> Self {
        BigRational::new(
            num.parse::<BigInt>().expect("lexed digits"),
            den.parse::<BigInt>().expect("nonzero denominator"),
        )
    }

    fn decimal(text: &str) -> Self {
        let (int_part, frac_part) = text.split_once('.').expect("lexed decimal");
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        let digits = format!("{int_part}{frac_part}")
            .parse::<BigInt>()
            .expect("lexed digits");
        BigRational::new(digits, scale)
    }
}

impl EvalCoeff for f64 {
    fn integer(digits: &str) -> Self {
        digits.parse().expect("lexed digits")
    }

    fn ratio(num: &str, den: &str) -> Self {
        let num: f64 = num.parse().expect("lexed digits");
        let den: f64 = den.parse().expect("nonzero denominator");
        num / den
    }

    fn decimal(text: &str) -> Self {
        text.parse().expect("lexed decimal")
    }
}

/// Evaluates a parsed expression to a canonical multivector.
pub fn eval<R: EvalCoeff>(expr: &Expression, sig: &Signature) -> Multivector<R> {
    match expr {
        Expression::Integer(digits) => Multivector::scalar(sig, R::integer(digits)),
        Expression::Ratio(num, den) => Multivector::scalar(sig, R::ratio(num, den)),
        Expression::Decimal(text) => Multivector::scalar(sig, R::decimal(text)),
        Expression::Generator(i) => {
            Multivector::generator(sig, *i).expect("generator validated at parse time")
        }
        Expression::Top => {
            Multivector::from_blade(sig, Blade::from_bits(sig.full_mask()), R::one())
        }
        Expression::Neg(inner) => -&eval(inner, sig),
        Expression::Add(a, b) => &eval::<R>(a, sig) + &eval::<R>(b, sig),
        Expression::Sub(a, b) => &eval::<R>(a, sig) - &eval::<R>(b, sig),
        Expression::Mul(a, b) => eval::<R>(a, sig).gp(&eval::<R>(b, sig)),
        Expression::Involution(g, inner) => eval::<R>(inner, sig).involution(*g),
        Expression::ScalarPart(inner) => {
            let value = eval::<R>(inner, sig).scalar_part();
            if value.is_zero() {
                Multivector::zero(sig)
            } else {
                Multivector::scalar(sig, value)
            }
        }
        Expression::GradeProject(inner, g) => eval::<R>(inner, sig).grade_project(*g),
    }
}

/// Canonical text form of a multivector; the inverse of [`parse`] + [`eval`].
pub fn print_expression<R: Ring>(mv: &Multivector<R>) -> String {
    mv.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(k: u32) -> Signature {
        Signature::euclidean(k).unwrap()
    }

    fn eval_rational(text: &str, k: u32) -> Result<Multivector<BigRational>, ExprError> {
        let s = sig(k);
        let expr = parse(text, RingTag::Rational, &s)?;
        Ok(eval(&expr, &s))
    }

    #[test]
    fn basic_expressions() {
        let mv = eval_rational("1 + e1*e2", 3).unwrap();
        assert_eq!(mv.to_string(), "1 + e1*e2");
        let clifford_law = eval_rational("e1*e1", 3).unwrap();
        assert_eq!(clifford_law.to_string(), "1");
        let t = eval_rational("T(e1*e2)", 3).unwrap();
        assert_eq!(t.to_string(), "-e1*e2");
    }

    #[test]
    fn precedence() {
        // * binds over +, unary minus tightest
        let mv = eval_rational("1 + 2*e1*e2 - 3", 2).unwrap();
        assert_eq!(mv.to_string(), "-2 + 2*e1*e2");
        let neg = eval_rational("-2*e1", 2).unwrap();
        assert_eq!(neg.to_string(), "-2*e1");
        let paren = eval_rational("-(1 + e1)*e1", 2).unwrap();
        assert_eq!(paren.to_string(), "-1 - e1");
    }

    #[test]
    fn functions() {
        let re = eval_rational("Re(3 + e1)", 2).unwrap();
        assert_eq!(re.to_string(), "3");
        let grade = eval_rational("grade(1 + e1 + e1*e2, 1)", 2).unwrap();
        assert_eq!(grade.to_string(), "e1");
        let top = eval_rational("top()", 2).unwrap();
        assert_eq!(top.to_string(), "e1*e2");
        // T fixes e1, C negates, H negates again
        let nested = eval_rational("H(C(T(e1)))", 2).unwrap();
        assert_eq!(nested.to_string(), "e1");
    }

    #[test]
    fn rational_literals() {
        let mv = eval_rational("3/4*e1 + 1/4*e1", 1).unwrap();
        assert_eq!(mv.to_string(), "e1");
        let dec = eval_rational("0.25 + 0.75", 1).unwrap();
        assert_eq!(dec.to_string(), "1");
    }

    #[test]
    fn gf2_letters_and_violations() {
        let s = sig(3);
        let expr = parse("a*b + 1", RingTag::Gf2, &s).unwrap();
        let mv: Multivector<Gf2> = eval(&expr, &s);
        assert_eq!(mv.to_string(), "1 + e1*e2");

        let violation = parse("0.5", RingTag::Gf2, &s).unwrap_err();
        assert_eq!(violation.kind, ExprErrorKind::RingViolation);
        let fraction = parse("1/2", RingTag::Gf2, &s).unwrap_err();
        assert_eq!(fraction.kind, ExprErrorKind::RingViolation);
        // letters only over gf2
        let letters = parse("a", RingTag::Rational, &s).unwrap_err();
        assert_eq!(letters.kind, ExprErrorKind::UnknownGenerator);
        // parity literal
        let expr = parse("3*a", RingTag::Gf2, &s).unwrap();
        let mv: Multivector<Gf2> = eval(&expr, &s);
        assert_eq!(mv.to_string(), "e1");
    }

    #[test]
    fn generator_bounds() {
        let s = sig(2);
        let e3 = parse("e3", RingTag::Rational, &s).unwrap_err();
        assert_eq!(e3.kind, ExprErrorKind::UnknownGenerator);
        let e0 = parse("e0", RingTag::Rational, &s).unwrap_err();
        assert_eq!(e0.kind, ExprErrorKind::UnknownGenerator);
        let z = parse("z", RingTag::Gf2, &s).unwrap_err();
        assert_eq!(z.kind, ExprErrorKind::UnknownGenerator);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let s = sig(2);
        let e = parse("1 +\n* 2", RingTag::Rational, &s).unwrap_err();
        assert_eq!(e.kind, ExprErrorKind::Syntax);
        assert_eq!(e.line, 2);
        assert_eq!(e.column, 1);
        let unclosed = parse("(1 + e1", RingTag::Rational, &s).unwrap_err();
        assert_eq!(unclosed.kind, ExprErrorKind::Syntax);
        let trailing = parse("1 2", RingTag::Rational, &s).unwrap_err();
        assert_eq!(trailing.kind, ExprErrorKind::Syntax);
    }

    #[test]
    fn input_length_cap() {
        let s = sig(1);
        let long = "1+".repeat(40_000);
        let e = parse(&long, RingTag::Rational, &s).unwrap_err();
        assert_eq!(e.kind, ExprErrorKind::InputTooLong);
    }

    #[test]
    fn float_round_trip_layers() {
        let s = sig(2);
        let expr = parse("2.5*e1 - 0.125", RingTag::Float64, &s).unwrap();
        let mv: Multivector<f64> = eval(&expr, &s);
        let printed = print_expression(&mv);
        let reparsed: Multivector<f64> = eval(&parse(&printed, RingTag::Float64, &s).unwrap(), &s);
        assert_eq!(reparsed, mv);
    }
}
