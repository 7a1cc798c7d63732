//! Text syntax for polynomials over GF(q), over R, and generator lists.
//!
//! ```text
//! list   := expr (',' expr)*
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power)*        juxtaposition multiplies
//! power  := atom ['^' integer]
//! atom   := integer | 'x' | 'u' | 'a' | '(' expr ')'
//! ```
//!
//! `a` is the class of the modulus variable in an extension field;
//! integers are reduced into the prime subfield.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::ring::RPoly;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Token {
    Num(u64),
    X,
    U,
    A,
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse(format!("integer overflow in {text:?}")))?;
                    chars.next();
                }
                out.push(Token::Num(v));
            }
            _ => {
                chars.next();
                out.push(match c {
                    'x' | 'X' => Token::X,
                    'u' | 'U' => Token::U,
                    'a' => Token::A,
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    ')' => Token::Close,
                    other => {
                        return Err(Error::Parse(format!(
                            "unexpected character {other:?} in {text:?}"
                        )))
                    }
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Field,
    tokens: Vec<Token>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.peek();
        self.pos += 1;
        t
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at token {} in {:?}", self.pos, self.text))
    }

    fn expr(&mut self) -> Result<RPoly> {
        let negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate {
            &RPoly::zero(self.field) - &first
        } else {
            first
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Token::Num(_) | Token::X | Token::U | Token::A | Token::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<RPoly> {
        let base = self.atom()?;
        if self.peek() != Some(Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Token::Num(e)) = self.next() else {
            return Err(self.error("expected integer exponent"));
        };
        let mut acc = RPoly::from_unit_part(Poly::one(self.field));
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RPoly> {
        let f = self.field;
        match self.next() {
            Some(Token::Num(v)) => {
                let c = (v % f.characteristic() as u64) as u32;
                Ok(RPoly::from_unit_part(Poly::constant(f, c)))
            }
            Some(Token::X) => Ok(RPoly::from_unit_part(Poly::x(f))),
            Some(Token::U) => Ok(RPoly::u_times(Poly::one(f))),
            Some(Token::A) => {
                if f.is_prime_field() {
                    return Err(self.error("'a' is only defined in extension fields"));
                }
                let a = f.from_coeffs(&[0, 1])?.value();
                Ok(RPoly::from_unit_part(Poly::constant(f, a)))
            }
            Some(Token::Open) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(self.error("expected ')'")),
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Parses one polynomial over R.
pub fn parse_rpoly(field: &Field, text: &str) -> Result<RPoly> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut parser = Parser {
        field,
        tokens,
        pos: 0,
        text,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(value)
}

/// Parses a comma-separated list of generators, e.g. `(x+1)(x^2+1), u(x+1)`.
pub fn parse_generators(field: &Field, text: &str) -> Result<Vec<RPoly>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts.into_iter().map(|p| parse_rpoly(field, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_products_and_powers() {
        let f5 = Field::prime(5).unwrap();
        let a = parse_rpoly(&f5, "(x+1)^2(x+4)^2+u(x^3+x)").unwrap();
        let b = parse_rpoly(&f5, "(x + 1)*(x+1)*(x+4)^2 + u*x^3 + u*x").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_rpoly(&f5, "-x").unwrap(), parse_rpoly(&f5, "4x").unwrap());
        assert_eq!(parse_rpoly(&f5, "7").unwrap(), parse_rpoly(&f5, "2").unwrap());
        assert!(parse_rpoly(&f5, "u^2").unwrap().is_zero());
        assert_eq!(
            parse_rpoly(&f5, "(1+u)(1-u)").unwrap(),
            parse_rpoly(&f5, "1").unwrap()
        );
    }

    #[test]
    fn generator_lists() {
        let f3 = Field::prime(3).unwrap();
        let gens = parse_generators(&f3, "(x+1)(x^2+1), u(x+1)").unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[1], RPoly::u_times(Poly::parse(&f3, "x+1").unwrap()));
    }

    #[test]
    fn malformed_input() {
        let f3 = Field::prime(3).unwrap();
        for bad in ["", "x+", "(x+1", "x^", "x^u", "x)", "y", "a+1"] {
            assert!(parse_rpoly(&f3, bad).is_err(), "{bad:?} should fail");
        }
    }
}
