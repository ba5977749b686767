//! Polynomial expression parser.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' uint)?
//! ```
//!
//! Whitespace is insignificant. The optional leading minus lets canonical
//! output such as `-x + 1` parse back.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bipoly::{BiPoly, Monomial};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Sparse polynomial over an arbitrary list of variables.
pub type SparsePoly = BTreeMap<Vec<u32>, Rational>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Ident(s)));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((pos, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [&'a str],
}

fn sp_add(a: &mut SparsePoly, b: SparsePoly, sign: bool) {
    for (m, c) in b {
        let c = if sign { c } else { -c };
        let entry = a.entry(m.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            a.remove(&m);
        }
    }
}

fn sp_mul(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut out = SparsePoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            sp_add(&mut out, SparsePoly::from([(m, ca * cb)]), true);
        }
    }
    out
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.here(),
            message: msg.into(),
        })
    }

    fn constant(&self, c: Rational) -> SparsePoly {
        let mut p = SparsePoly::new();
        if !c.is_zero() {
            p.insert(vec![0; self.vars.len()], c);
        }
        p
    }

    fn expr(&mut self) -> Result<SparsePoly> {
        let mut negate_first = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            negate_first = true;
        }
        let mut acc = SparsePoly::new();
        let first = self.term()?;
        sp_add(&mut acc, first, !negate_first);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    sp_add(&mut acc, t, true);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    sp_add(&mut acc, t, false);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SparsePoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = sp_mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SparsePoly> {
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().or_else(|_| self.err("exponent too large"))?;
                    self.pos += 1;
                    e
                }
                _ => return self.err("expected an unsigned exponent"),
            };
            let mut acc = self.constant(Rational::one());
            for _ in 0..e {
                acc = sp_mul(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<SparsePoly> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= Rational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected an unsigned denominator"),
                    }
                }
                Ok(self.constant(value))
            }
            Some(Tok::Ident(name)) => {
                let Some(idx) = self.vars.iter().position(|v| *v == name) else {
                    return Err(Error::UnknownVariable(name));
                };
                self.pos += 1;
                let mut m = vec![0; self.vars.len()];
                m[idx] = 1;
                Ok(SparsePoly::from([(m, Rational::one())]))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as a polynomial in the declared variables.
pub fn parse_sparse(text: &str, vars: &[&str]) -> Result<SparsePoly> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        vars,
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a polynomial in `x` and `y`; `vars` restricts which of the two
/// may appear.
pub fn poly_parse(text: &str, vars: &[&str]) -> Result<BiPoly> {
    for v in vars {
        if *v != "x" && *v != "y" {
            return Err(Error::UnknownVariable(v.to_string()));
        }
    }
    let sp = parse_sparse(text, vars)?;
    let xi = vars.iter().position(|v| *v == "x");
    let yi = vars.iter().position(|v| *v == "y");
    Ok(BiPoly::from_terms(sp.into_iter().map(|(m, c)| {
        let ex = xi.map(|i| m[i]).unwrap_or(0);
        let ey = yi.map(|i| m[i]).unwrap_or(0);
        (Monomial::new(ex, ey), c)
    })))
}

/// Shorthand for `poly_parse(text, &["x", "y"])`.
pub fn parse_xy(text: &str) -> Result<BiPoly> {
    poly_parse(text, &["x", "y"])
}
