//! A small parser for polynomial expressions in `t`, `x`, `y`.
//!
//! Accepts integers, the three variables, `+ - * ^`, parentheses and
//! implicit multiplication by juxtaposition (`2t^2x(1-y)`), which keeps
//! transcriptions close to how the formulas are usually typeset.

use num_bigint::BigInt;

use crate::error::{parse_err, Error, Result};
use crate::poly::{LaurentPoly2, TPoly};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => {}
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push((col, Token::Int(digits.parse().expect("digits"))));
            }
            't' | 'x' | 'y' => out.push((col, Token::Var(c))),
            '+' => out.push((col, Token::Plus)),
            '-' => out.push((col, Token::Minus)),
            '*' => out.push((col, Token::Star)),
            '^' => out.push((col, Token::Caret)),
            '(' => out.push((col, Token::Open)),
            ')' => out.push((col, Token::Close)),
            other => return Err(parse_err(col, format!("unexpected character `{other}`"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end_column: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end_column, |(c, _)| *c)
    }

    fn expr(&mut self) -> Result<TPoly> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<TPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Int(_) | Token::Var(_) | Token::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<TPoly> {
        if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<TPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.column();
        match self.tokens.get(self.pos) {
            Some((_, Token::Int(k))) => {
                let k = u32::try_from(k).map_err(|_| parse_err(col, "exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(k))
            }
            _ => Err(parse_err(col, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<TPoly> {
        let col = self.column();
        let Some((_, tok)) = self.tokens.get(self.pos).cloned() else {
            return Err(parse_err(col, "unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Token::Int(c) => Ok(TPoly::from_laurent(LaurentPoly2::constant(c))),
            Token::Var('t') => Ok(TPoly::t()),
            Token::Var('x') => Ok(TPoly::from_laurent(LaurentPoly2::x())),
            Token::Var(_) => Ok(TPoly::from_laurent(LaurentPoly2::y())),
            Token::Open => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(parse_err(self.column(), "expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(parse_err(col, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses and fully expands a polynomial expression.
pub fn parse_tpoly(s: &str) -> Result<TPoly> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
        end_column: s.chars().count() + 1,
    };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(parse_err(p.column(), "trailing input"));
    }
    Ok(value)
}

impl std::str::FromStr for TPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tpoly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(s: &str) -> String {
        parse_tpoly(s).unwrap().to_string()
    }

    #[test]
    fn implicit_multiplication_and_powers() {
        assert_eq!(show("2t^2x"), "2*t^2*x");
        assert_eq!(show("(1+t)^2"), "1 + 2*t + t^2");
        assert_eq!(show("-x^2"), "-x^2");
        assert_eq!(show("t^10t"), "t^11");
        assert_eq!(show("x(x-y)(x+y)"), "x^3 - x*y^2");
        assert_eq!(show("-14x^2y^2+x"), "-14*x^2*y^2 + x");
    }

    #[test]
    fn errors_carry_columns() {
        assert!(matches!(parse_tpoly("x+z"), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(parse_tpoly("(x+y"), Err(Error::Parse { column: 5, .. })));
        assert!(parse_tpoly("x^y").is_err());
    }
}
