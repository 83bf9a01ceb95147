//! Recursive-descent parser for scalar expressions:
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := '-'? atom ('^' int)?
//! atom   := int | 'q' | '(' expr ')'
//! ```
//!
//! Exponents may be negative. The lexer is shared with the monomial grammar,
//! which adds bracketed generator letters.

use num::BigInt;

use super::{ParseError, Scalar, ScalarError};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Token {
    Int(BigInt),
    Q,
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

impl Token {
    pub(crate) fn describe(&self) -> String {
        match self {
            Token::Int(v) => format!("integer {v}"),
            Token::Q => "'q'".into(),
            Token::Ident(s) => format!("identifier '{s}'"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::LBracket => "'['".into(),
            Token::RBracket => "']'".into(),
            Token::Comma => "','".into(),
        }
    }
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let v: BigInt = text[start..pos].parse().expect("digit run");
                out.push((start, Token::Int(v)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                let word = &text[start..pos];
                let tok = if word == "q" {
                    Token::Q
                } else {
                    Token::Ident(word.to_string())
                };
                out.push((start, tok));
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'[' => Token::LBracket,
            b']' => Token::RBracket,
            b',' => Token::Comma,
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::new(start, format!("unexpected character '{ch}'")));
            }
        };
        pos += 1;
        out.push((start, tok));
    }
    Ok(out)
}

/// Token cursor shared by the scalar and monomial parsers.
pub(crate) struct Cursor {
    tokens: Vec<(usize, Token)>,
    idx: usize,
    end: usize,
}

impl Cursor {
    pub(crate) fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Cursor {
            tokens: tokenize(text)?,
            idx: 0,
            end: text.len(),
        })
    }

    pub(crate) fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.idx).map(|(_, t)| t)
    }

    pub(crate) fn pos(&self) -> usize {
        self.tokens.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    pub(crate) fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    pub(crate) fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &Token) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected {}", tok.describe())))
        }
    }

    pub(crate) fn unexpected(&self, context: &str) -> ParseError {
        let found = self
            .peek()
            .map_or_else(|| "end of input".to_string(), Token::describe);
        ParseError::new(self.pos(), format!("{context}, found {found}"))
    }

    pub(crate) fn at_end(&self) -> bool {
        self.idx >= self.tokens.len()
    }

    /// Signed integer exponent after a '^'.
    pub(crate) fn exponent(&mut self) -> Result<i32, ParseError> {
        let negative = self.eat(&Token::Minus);
        let pos = self.pos();
        match self.next() {
            Some(Token::Int(v)) => {
                let v = if negative { -v } else { v };
                i32::try_from(v).map_err(|_| ParseError::new(pos, "exponent out of range"))
            }
            _ => {
                self.idx -= 1;
                Err(self.unexpected("expected integer exponent"))
            }
        }
    }
}

/// Parses a scalar expression into canonical form.
pub fn parse_scalar(text: &str) -> Result<Scalar, ScalarError> {
    let mut cur = Cursor::new(text)?;
    if cur.at_end() {
        return Err(ParseError::new(0, "empty expression").into());
    }
    let value = expr(&mut cur)?;
    if !cur.at_end() {
        return Err(cur.unexpected("expected operator").into());
    }
    Ok(value)
}

fn expr(cur: &mut Cursor) -> Result<Scalar, ScalarError> {
    let mut acc = term(cur)?;
    loop {
        if cur.eat(&Token::Plus) {
            acc = acc + term(cur)?;
        } else if cur.eat(&Token::Minus) {
            acc = acc - term(cur)?;
        } else {
            return Ok(acc);
        }
    }
}

fn term(cur: &mut Cursor) -> Result<Scalar, ScalarError> {
    let mut acc = factor(cur)?;
    loop {
        if cur.eat(&Token::Star) {
            acc = acc * factor(cur)?;
        } else if cur.eat(&Token::Slash) {
            let rhs = factor(cur)?;
            acc = acc.checked_div(&rhs)?;
        } else {
            return Ok(acc);
        }
    }
}

pub(crate) fn factor(cur: &mut Cursor) -> Result<Scalar, ScalarError> {
    let negate = cur.eat(&Token::Minus);
    let mut value = atom(cur)?;
    if cur.eat(&Token::Caret) {
        let e = cur.exponent()?;
        value = value.pow(e)?;
    }
    Ok(if negate { -value } else { value })
}

fn atom(cur: &mut Cursor) -> Result<Scalar, ScalarError> {
    match cur.peek() {
        Some(Token::Int(_)) => match cur.next() {
            Some(Token::Int(v)) => Ok(Scalar::from_bigint(v)),
            _ => unreachable!(),
        },
        Some(Token::Q) => {
            cur.next();
            Ok(Scalar::q())
        }
        Some(Token::LParen) => {
            cur.next();
            let v = expr(cur)?;
            cur.expect(&Token::RParen)?;
            Ok(v)
        }
        _ => Err(cur.unexpected("expected integer, 'q' or '('").into()),
    }
}

impl std::str::FromStr for Scalar {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    #[test]
    fn reads_literal_polynomial() {
        let s = parse_scalar("q^2 - 1").unwrap();
        assert!(s.is_polynomial());
        assert_eq!(s.to_string(), "q^2 - 1");
    }

    #[test]
    fn cancels_common_factor() {
        let s = parse_scalar("(q^2-1)/(q-1)").unwrap();
        assert_eq!(s, parse_scalar("q+1").unwrap());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(parse_scalar("1/(q - q)"), Err(ScalarError::DivisionByZero));
        assert_eq!(parse_scalar("0^-1"), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn negative_exponents_and_unary_minus() {
        let s = parse_scalar("q - q^-1").unwrap();
        assert_eq!(s.to_string(), "(q^2 - 1)/q");
        assert_eq!(parse_scalar("-q^2").unwrap(), -parse_scalar("q^2").unwrap());
        assert_eq!(parse_scalar("2^-2*4").unwrap(), Scalar::one());
    }

    #[test]
    fn syntax_errors_report_position() {
        match parse_scalar("q + * 2") {
            Err(ScalarError::Parse(e)) => assert_eq!(e.position, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_scalar("(q + 1") {
            Err(ScalarError::Parse(e)) => assert_eq!(e.position, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_scalar("q q").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("t").is_err());
        assert!(parse_scalar("q # 1").is_err());
    }
}
