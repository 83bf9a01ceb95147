//! Exact arithmetic in Q(q), the field of rational functions in one
//! indeterminate over the rationals.

mod parse;
mod poly;
mod ratfunc;

use std::fmt;

use num::BigRational;
use thiserror::Error;

pub use parse::parse_scalar;
pub(crate) use parse::{factor as scalar_factor, Cursor, Token};
pub use poly::Poly;
pub use ratfunc::Scalar;

/// A syntax error at a byte offset of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("syntax error {0}")]
    Parse(#[from] ParseError),
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(BigRational),
}

/// The four field operations, for callers that dispatch on an operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar, ScalarError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

pub fn evaluate_at(a: &Scalar, q0: &BigRational) -> Result<BigRational, ScalarError> {
    a.evaluate_at(q0)
}

/// Parses a rational literal such as `3`, `-2/5`.
pub fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let s = parse_scalar(text)?;
    s.as_constant()
        .ok_or_else(|| ParseError::new(0, format!("'{text}' is not a rational constant")).into())
}
