//! Text grammar for polynomials in `x0..x3`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `x0, x1, x2, x3` or the aliases `x, y, z, w`. Division is
//! only allowed by a nonzero constant, which is how rational coefficients
//! such as `3/2*x0` are written. Whitespace is ignored everywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::poly::{Monomial, Poly, Scalar};

/// Largest total degree accepted from text.
pub const MAX_DEGREE: u32 = 32;
const MAX_NESTING: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {col}: expected {expected}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub expected: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Var(i) => write!(f, "variable x{i}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Spanned { tok, line: l0, col: c0 });
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            col += i - start;
            let n = BigInt::from_str(&digits).expect("ascii digits");
            out.push(Spanned { tok: Tok::Num(n), line: l0, col: c0 });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            col += i - start;
            let var = match ident.as_str() {
                "x0" | "x" => 0,
                "x1" | "y" => 1,
                "x2" | "z" => 2,
                "x3" | "w" => 3,
                _ => {
                    return Err(ParseError {
                        line: l0,
                        col: c0,
                        expected: format!("one of x0..x3 or x, y, z, w (found `{ident}`)"),
                    })
                }
            };
            out.push(Spanned { tok: Tok::Var(var), line: l0, col: c0 });
            continue;
        }
        return Err(ParseError {
            line: l0,
            col: c0,
            expected: format!("a number, variable, operator or parenthesis (found `{c}`)"),
        });
    }
    out.push(Spanned { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, at: &Spanned, expected: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            line: at.line,
            col: at.col,
            expected: format!("{} (found {})", expected.into(), at.tok),
        })
    }

    fn check_degree(&self, at: &Spanned, deg: Option<u32>) -> Result<(), ParseError> {
        match deg {
            Some(d) if d > MAX_DEGREE => self.fail(at, format!("total degree at most {MAX_DEGREE}")),
            _ => Ok(()),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        self.depth += 1;
        if self.depth > MAX_NESTING {
            let at = self.peek().clone();
            return self.fail(&at, format!("nesting depth at most {MAX_NESTING}"));
        }
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    let at = self.bump();
                    let rhs = self.unary()?;
                    let deg = acc.degree().zip(rhs.degree()).map(|(a, b)| a + b);
                    self.check_degree(&at, deg)?;
                    acc = &acc * &rhs;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.peek().clone();
                    let rhs = self.unary()?;
                    if rhs.is_zero() || !rhs.is_constant() {
                        return self.fail(&at, "a nonzero constant divisor");
                    }
                    let c = rhs.coeff(&Monomial::one());
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly, ParseError> {
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    let at = self.peek().clone();
                    return self.fail(&at, format!("nesting depth at most {MAX_NESTING}"));
                }
                let p = -self.unary()?;
                self.depth -= 1;
                Ok(p)
            }
            Tok::Plus => {
                self.bump();
                self.depth += 1;
                if self.depth > MAX_NESTING {
                    let at = self.peek().clone();
                    return self.fail(&at, format!("nesting depth at most {MAX_NESTING}"));
                }
                let p = self.unary()?;
                self.depth -= 1;
                Ok(p)
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.bump();
        let Tok::Num(n) = &at.tok else {
            return self.fail(&at, "a non-negative integer exponent");
        };
        let e = match u32::try_from(n.clone()) {
            Ok(e) if e <= 2 * MAX_DEGREE => e,
            _ => return self.fail(&at, format!("an exponent at most {}", 2 * MAX_DEGREE)),
        };
        self.check_degree(&at, base.degree().map(|d| d * e))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let at = self.bump();
        match at.tok {
            Tok::Num(n) => Ok(Poly::constant(Scalar::from_integer(n))),
            Tok::Var(i) => Ok(Poly::var(i)),
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return self.fail(&close, "')'");
                }
                Ok(inner)
            }
            _ => self.fail(&at, "a number, variable or '('"),
        }
    }
}

/// Parse a polynomial in the documented grammar.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, depth: 0 };
    if p.peek().tok == Tok::End {
        let at = p.peek().clone();
        return p.fail(&at, "a polynomial");
    }
    let poly = p.expr()?;
    let at = p.peek().clone();
    if at.tok != Tok::End {
        return p.fail(&at, "an operator or end of input");
    }
    debug_assert!(poly.terms().all(|(_, c)| !c.is_zero()));
    Ok(poly)
}

impl FromStr for Poly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}
