//! Polynomial expressions in `x1, x2, ...`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' exp)?
//! exp    := INT ('^' exp)?
//! atom   := INT | 'x' INT | '(' expr ')'
//! ```
//!
//! Division is only by a constant that is a unit, or over `Z` by a constant
//! dividing every coefficient. The rendering of [`MultivarPoly`] parses back
//! to the same polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::MultivarPoly;
use crate::ring::RingSpec;

pub const DEFAULT_EXPONENT_CAP: u32 = 64;

/// Parses `text`. With `nvars` unset the arity is the largest variable
/// index seen (at least 1).
pub fn parse_poly(text: &str, ring: &RingSpec, nvars: Option<usize>) -> Result<MultivarPoly> {
    parse_poly_with_cap(text, ring, nvars, DEFAULT_EXPONENT_CAP)
}

pub fn parse_poly_with_cap(
    text: &str,
    ring: &RingSpec,
    nvars: Option<usize>,
    cap: u32,
) -> Result<MultivarPoly> {
    if nvars == Some(0) {
        return Err(Error::InvalidArgument("nvars must be positive".into()));
    }
    let tokens = tokenize(text)?;
    let max_var = tokens
        .iter()
        .filter_map(|t| match t.kind {
            Tok::Var(i) => Some(i),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    let n = match nvars {
        Some(n) => {
            if let Some(t) = tokens
                .iter()
                .find(|t| matches!(t.kind, Tok::Var(i) if i > n))
            {
                return Err(parse_err(
                    t.pos,
                    format!("unknown variable for {n} variables"),
                ));
            }
            n
        }
        None => max_var.max(1),
    };
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        nvars: n,
        cap,
        end: text.len(),
    };
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(parse_err(t.pos, "unexpected token"));
    }
    Ok(out)
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    pos: usize,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let kind = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token {
                    kind: Tok::Int(text[start..i].parse().expect("ascii digits")),
                    pos: start,
                });
                continue;
            }
            b'x' | b'X' => {
                i += 1;
                let digits = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let index = text[digits..i]
                    .parse::<usize>()
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| parse_err(start, "variables are written x1, x2, ..."))?;
                out.push(Token {
                    kind: Tok::Var(index),
                    pos: start,
                });
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(parse_err(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push(Token { kind, pos: start });
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a RingSpec,
    nvars: usize,
    cap: u32,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn eat(&mut self, kind: &Tok) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultivarPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultivarPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = &acc * &self.unary()?;
            } else if self.peek().is_some_and(|t| t.kind == Tok::Slash) {
                let pos = self.here();
                self.pos += 1;
                let divisor = self.unary()?;
                acc = self.divide(acc, &divisor, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultivarPoly> {
        if self.eat(&Tok::Minus) {
            let inner = self.unary()?;
            return Ok(&MultivarPoly::zero(self.ring, self.nvars) - &inner);
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultivarPoly> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<u32> {
        let pos = self.here();
        let value = match self.peek().map(|t| t.kind.clone()) {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                v
            }
            _ => {
                return Err(parse_err(
                    pos,
                    "exponent must be a nonnegative integer literal",
                ))
            }
        };
        let value = if self.eat(&Tok::Caret) {
            let upper = self.exponent()?;
            num_traits::pow(value, upper as usize)
        } else {
            value
        };
        value
            .to_u32()
            .filter(|&e| e <= self.cap)
            .ok_or_else(|| parse_err(pos, format!("exponent exceeds the cap of {}", self.cap)))
    }

    fn atom(&mut self) -> Result<MultivarPoly> {
        let pos = self.here();
        let Some(tok) = self.peek().cloned() else {
            return Err(parse_err(pos, "unexpected end of input"));
        };
        self.pos += 1;
        match tok.kind {
            Tok::Int(v) => Ok(MultivarPoly::constant(
                self.ring.from_integer(v),
                self.nvars,
            )),
            Tok::Var(i) => MultivarPoly::variable(self.ring, self.nvars, i - 1),
            Tok::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(parse_err(self.here(), "expected ')'"));
                }
                Ok(inner)
            }
            _ => Err(parse_err(pos, "expected a number, variable or '('")),
        }
    }

    fn divide(&self, num: MultivarPoly, den: &MultivarPoly, pos: usize) -> Result<MultivarPoly> {
        let c = match den.terms().next() {
            Some((e, c)) if den.num_terms() == 1 && e.total() == 0 => c.clone(),
            None => return Err(parse_err(pos, "division by zero")),
            _ => return Err(parse_err(pos, "division only by constants")),
        };
        if c.is_unit() {
            return num.scale(&c.invert()?);
        }
        if *self.ring == RingSpec::integers() {
            let d = c.to_bigint().expect("integer ring");
            let mut terms = Vec::with_capacity(num.num_terms());
            for (e, v) in num.terms() {
                let (q, r) = v.to_bigint().expect("integer ring").div_rem(&d);
                if !r.is_zero() {
                    return Err(parse_err(pos, format!("{v} is not divisible by {d}")));
                }
                terms.push((e.to_vec(), self.ring.from_integer(q)));
            }
            return MultivarPoly::from_terms(self.ring, self.nvars, terms);
        }
        Err(parse_err(
            pos,
            format!("division by {c}, which is not a unit in {}", self.ring),
        ))
    }
}
