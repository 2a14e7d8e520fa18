//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" factor) | ("/" nat))*
//! factor := atom ("^" nat)?
//! atom   := "(" expr ")" | var | number | "-" factor
//! number := int ("/" nat)?
//! ```
//!
//! Variables are single letters. Multiplication must be written explicitly,
//! so `xy` is rejected rather than read as `x*y`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::exactpoly::{Coefficient, Polynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Character offset into the source.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// Two-line rendering with a caret under the offending character.
    pub fn render(&self, src: &str) -> String {
        format!("{}\n  {}\n  {}^", self, src, " ".repeat(self.position))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Num(digits.parse().expect("ascii digits")), start));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_alphabetic() => Tok::Var(c),
            other => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    allowed: &'a [Var],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, o)| o).unwrap_or(self.end)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.nonzero_nat("divisor")?;
                    acc = acc.scale(&Coefficient::new(1.into(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let exp = self.nat("exponent")?;
            let Some(exp) = exp.to_u32() else {
                return self.error("exponent too large");
            };
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        let start = self.offset();
        match self.bump() {
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(Tok::Var(c)) => match Var::from_symbol(c) {
                Some(v) if self.allowed.contains(&v) => Ok(Polynomial::var(v)),
                _ => Err(ParseError {
                    position: start,
                    message: format!("unknown variable '{c}'"),
                }),
            },
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let d = self.nonzero_nat("denominator")?;
                    Ok(Polynomial::constant(Coefficient::new(n, d)))
                } else {
                    Ok(Polynomial::constant(Coefficient::from_integer(n)))
                }
            }
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::RParen) => Err(ParseError {
                position: start,
                message: "unbalanced ')'".into(),
            }),
            Some(_) => Err(ParseError {
                position: start,
                message: "expected a variable, number or '('".into(),
            }),
            None => Err(ParseError {
                position: start,
                message: "unexpected end of input".into(),
            }),
        }
    }

    fn nat(&mut self, what: &str) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.bump();
                Ok(n)
            }
            _ => self.error(format!("{what} must be a nonnegative integer literal")),
        }
    }

    fn nonzero_nat(&mut self, what: &str) -> Result<BigInt, ParseError> {
        let at = self.offset();
        let n = self.nat(what)?;
        if n.is_zero() {
            return Err(ParseError {
                position: at,
                message: "division by zero".into(),
            });
        }
        Ok(n)
    }
}

/// Parses `src` into a polynomial over the variables in `allowed`.
pub fn parse_polynomial(src: &str, allowed: &[Var]) -> Result<Polynomial, ParseError> {
    let len = src.chars().count();
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(ParseError {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: len.saturating_sub(1),
        allowed,
    };
    let p = parser.expr()?;
    match parser.peek() {
        None => Ok(p),
        Some(Tok::RParen) => parser.error("unbalanced ')'"),
        Some(_) => parser.error("expected an operator (multiplication must be written as '*')"),
    }
}
