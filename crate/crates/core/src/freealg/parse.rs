//! Parser for the monomial grammar used in CLI input and relator output:
//!
//! ```text
//! poly   := '-'? term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' scalar))*
//! factor := letter | scalar
//! letter := 't[' int ',' int ']' | 'u[' int ',' int ']' | 'E[' int ']' | 'F[' int ']'
//! ```
//!
//! Scalar factors commute with letters and multiply into the coefficient.

use num::{BigInt, One, ToPrimitive};

use super::{FreePoly, Letter, Monomial};
use crate::scalars::{scalar_factor, Cursor, ParseError, Scalar, ScalarError, Token};

pub fn parse_poly(text: &str) -> Result<FreePoly<Scalar>, ScalarError> {
    let mut cur = Cursor::new(text)?;
    if cur.at_end() {
        return Err(ParseError::new(0, "empty expression").into());
    }
    let mut out = FreePoly::zero();
    let mut negate = cur.eat(&Token::Minus);
    loop {
        let (m, c) = term(&mut cur)?;
        out.add_term(m, if negate { -c } else { c });
        if cur.eat(&Token::Plus) {
            negate = false;
        } else if cur.eat(&Token::Minus) {
            negate = true;
        } else if cur.at_end() {
            return Ok(out);
        } else {
            return Err(cur.unexpected("expected '+', '-' or '*'").into());
        }
    }
}

/// A single word: letters joined by `*`, or `1`.
pub fn parse_monomial(text: &str) -> Result<Monomial, ScalarError> {
    let mut cur = Cursor::new(text)?;
    if cur.peek() == Some(&Token::Int(BigInt::one())) {
        cur.next();
        if !cur.at_end() {
            return Err(cur.unexpected("expected end of monomial").into());
        }
        return Ok(Monomial::unit());
    }
    let mut letters = vec![letter(&mut cur)?];
    while cur.eat(&Token::Star) {
        letters.push(letter(&mut cur)?);
    }
    if !cur.at_end() {
        return Err(cur.unexpected("expected '*' or end of monomial").into());
    }
    Ok(Monomial::new(letters))
}

fn term(cur: &mut Cursor) -> Result<(Monomial, Scalar), ScalarError> {
    let mut letters = Vec::new();
    let mut coeff = Scalar::one();
    factor(cur, &mut letters, &mut coeff)?;
    loop {
        if cur.eat(&Token::Star) {
            factor(cur, &mut letters, &mut coeff)?;
        } else if cur.eat(&Token::Slash) {
            let d = scalar_factor(cur)?;
            coeff = coeff.checked_div(&d)?;
        } else {
            return Ok((Monomial::new(letters), coeff));
        }
    }
}

fn factor(cur: &mut Cursor, letters: &mut Vec<Letter>, coeff: &mut Scalar) -> Result<(), ScalarError> {
    if matches!(cur.peek(), Some(Token::Ident(_))) {
        letters.push(letter(cur)?);
    } else {
        *coeff = &*coeff * &scalar_factor(cur)?;
    }
    Ok(())
}

fn letter(cur: &mut Cursor) -> Result<Letter, ParseError> {
    let name = match cur.peek() {
        Some(Token::Ident(s)) if matches!(s.as_str(), "t" | "u" | "E" | "F") => s.clone(),
        _ => return Err(cur.unexpected("expected generator t, u, E or F")),
    };
    cur.next();
    cur.expect(&Token::LBracket)?;
    let i = index(cur)?;
    let l = match name.as_str() {
        "t" | "u" => {
            cur.expect(&Token::Comma)?;
            let j = index(cur)?;
            if name == "t" {
                Letter::T(i, j)
            } else {
                Letter::U(i, j)
            }
        }
        "E" => Letter::E(i),
        _ => Letter::F(i),
    };
    cur.expect(&Token::RBracket)?;
    Ok(l)
}

fn index(cur: &mut Cursor) -> Result<usize, ParseError> {
    let pos = cur.pos();
    match cur.peek() {
        Some(Token::Int(v)) => {
            let v = v.to_usize().ok_or_else(|| ParseError::new(pos, "index out of range"))?;
            cur.next();
            Ok(v)
        }
        _ => Err(cur.unexpected("expected index")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::parse_scalar;

    #[test]
    fn parses_words() {
        let m = parse_monomial("F[0]*u[1,0]*F[1]").unwrap();
        assert_eq!(
            m.letters(),
            &[Letter::F(0), Letter::U(1, 0), Letter::F(1)]
        );
        assert!(parse_monomial("1").unwrap().is_unit());
        assert!(parse_monomial("E[0]*").is_err());
        assert!(parse_monomial("x[0]").is_err());
    }

    #[test]
    fn parses_coefficients() {
        let p = parse_poly("q*E[0]*E[1] - E[1]*E[0]").unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&parse_monomial("E[0]*E[1]").unwrap()), Scalar::q());
        let p = parse_poly("-((q^2 - 1)/q)*t[0,0] + 3 + E[0]*q/2").unwrap();
        assert_eq!(
            p.coefficient(&parse_monomial("t[0,0]").unwrap()),
            parse_scalar("-(q^2-1)/q").unwrap()
        );
        assert_eq!(p.coefficient(&Monomial::unit()), Scalar::from_int(3));
        assert_eq!(
            p.coefficient(&parse_monomial("E[0]").unwrap()),
            parse_scalar("q/2").unwrap()
        );
    }

    #[test]
    fn error_positions() {
        let err = parse_poly("E[0] + t[0]").unwrap_err();
        assert!(matches!(err, ScalarError::Parse(ParseError { position: 10, .. })));
        assert!(parse_poly("").is_err());
        assert!(matches!(parse_poly("E[0]/0"), Err(ScalarError::DivisionByZero)));
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "q*E[0]*E[1] - E[1]*E[0]",
            "3 - ((q^2 - 1)/q)*t[0,0]",
            "-F[1] + 1/2*q*u[0,1]*F[0]",
        ] {
            let p = parse_poly(text).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{text}");
        }
    }
}
