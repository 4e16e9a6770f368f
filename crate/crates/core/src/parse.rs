//! Expression parser for scalars and noncommutative polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (['*' | '/'] factor)*      juxtaposition multiplies
//! factor := ['-'] atom ['^' ['-'] int]
//! atom   := int | ident | '(' expr ')'
//! ```
//!
//! Scalar identifiers are `i`, `r`, `s`, `q`, `w`. Generator names come from
//! the alphabet; an unknown identifier is split greedily into generator
//! names, so `u11u22` and `abcd` are accepted.

use std::sync::Arc;

use thiserror::Error;

use crate::freealg::{Alphabet, NcPoly};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

/// Generators and named shorthands visible to the parser.
#[derive(Clone, Default)]
pub struct Context {
    pub alphabet: Option<Arc<Alphabet>>,
    pub aliases: Vec<(String, NcPoly)>,
}

impl Context {
    pub fn scalars() -> Context {
        Context::default()
    }

    pub fn over(alpha: &Arc<Alphabet>) -> Context {
        Context { alphabet: Some(alpha.clone()), aliases: Vec::new() }
    }

    pub fn alias(mut self, name: &str, p: NcPoly) -> Context {
        self.aliases.push((name.to_string(), p));
        self
    }
}

#[derive(Clone)]
enum Val {
    S(Scalar),
    P(NcPoly),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n = src[start..i]
                    .parse::<i64>()
                    .map_err(|_| ParseError { pos: start, msg: "integer too large".into() })?;
                out.push((start, Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
                continue;
            }
            _ => {
                return Err(ParseError { pos: start, msg: format!("unexpected character '{}'", c as char) });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ctx: &'a Context,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.combine(acc, t, |a, b| a + b, |a, b| a.add(b))?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = self.combine(acc, t, |a, b| a - b, |a, b| a.sub(b))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.factor()?;
                    acc = self.combine(acc, f, |a, b| a * b, |a, b| a.mul(b))?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.pos();
                    let f = self.factor()?;
                    let d = match f {
                        Val::S(d) => d,
                        Val::P(p) => match p.as_scalar() {
                            Some(d) => d,
                            None => return Err(ParseError { pos, msg: "division by a non-scalar".into() }),
                        },
                    };
                    if d.is_zero() {
                        return Err(ParseError { pos, msg: "division by zero".into() });
                    }
                    let inv = d.inv();
                    acc = match acc {
                        Val::S(a) => Val::S(a * inv),
                        Val::P(p) => Val::P(p.scale(&inv)),
                    };
                }
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    let f = self.factor()?;
                    acc = self.combine(acc, f, |a, b| a * b, |a, b| a.mul(b))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Val, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            let f = self.factor()?;
            return Ok(match f {
                Val::S(s) => Val::S(-s),
                Val::P(p) => Val::P(p.neg()),
            });
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let pos = self.pos();
        let n = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return Err(ParseError { pos, msg: "expected integer exponent".into() }),
        };
        let n = if neg { -n } else { n };
        match base {
            Val::S(s) => {
                if s.is_zero() && n < 0 {
                    return Err(ParseError { pos, msg: "negative power of zero".into() });
                }
                Ok(Val::S(s.pow(n)))
            }
            Val::P(p) => {
                if n < 0 {
                    return match p.as_scalar() {
                        Some(s) if !s.is_zero() => Ok(Val::P(NcPoly::scalar(p.alphabet(), s.pow(n)))),
                        _ => Err(ParseError { pos, msg: "negative power of a non-scalar".into() }),
                    };
                }
                Ok(Val::P(p.pow(n as usize)))
            }
        }
    }

    fn atom(&mut self) -> Result<Val, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Val::S(Scalar::int(n))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    return Err(ParseError { pos: self.toks.get(self.at - 1).map_or(self.end, |t| t.0), msg: "expected ')'".into() });
                }
                Ok(v)
            }
            Some(Tok::Ident(name)) => self.ident(&name, pos),
            Some(t) => Err(ParseError { pos, msg: format!("unexpected {t:?}") }),
            None => Err(ParseError { pos, msg: "unexpected end of input".into() }),
        }
    }

    fn known(&self, name: &str) -> Option<Val> {
        if let Some((_, p)) = self.ctx.aliases.iter().find(|(n, _)| n == name) {
            return Some(Val::P(p.clone()));
        }
        if let Some(a) = &self.ctx.alphabet {
            if let Some(l) = a.letter(name) {
                return Some(Val::P(NcPoly::gen(a, l)));
            }
        }
        match name {
            "i" => Some(Val::S(Scalar::i())),
            "r" => Some(Val::S(Scalar::r())),
            "s" => Some(Val::S(Scalar::s_pow(1))),
            "q" => Some(Val::S(Scalar::q())),
            "w" => Some(Val::S(Scalar::w())),
            "eta" => Some(Val::S(Scalar::eta())),
            _ => None,
        }
    }

    fn ident(&self, name: &str, pos: usize) -> Result<Val, ParseError> {
        if let Some(v) = self.known(name) {
            return Ok(v);
        }
        // Greedy longest-prefix split into known names.
        let mut rest = name;
        let mut acc: Option<Val> = None;
        while !rest.is_empty() {
            let mut found = None;
            for k in (1..=rest.len()).rev() {
                if let Some(v) = self.known(&rest[..k]) {
                    found = Some((k, v));
                    break;
                }
            }
            let Some((k, v)) = found else {
                return Err(ParseError { pos, msg: format!("unknown identifier '{name}'") });
            };
            acc = Some(match acc {
                None => v,
                Some(a) => self.combine(a, v, |a, b| a * b, |a, b| a.mul(b))?,
            });
            rest = &rest[k..];
        }
        Ok(acc.expect("nonempty identifier"))
    }

    fn combine(
        &self,
        a: Val,
        b: Val,
        fs: impl Fn(Scalar, Scalar) -> Scalar,
        fp: impl Fn(&NcPoly, &NcPoly) -> NcPoly,
    ) -> Result<Val, ParseError> {
        Ok(match (a, b) {
            (Val::S(x), Val::S(y)) => Val::S(fs(x, y)),
            (Val::P(x), Val::P(y)) => {
                if !Alphabet::same(x.alphabet(), y.alphabet()) {
                    return self.err("mixed alphabets");
                }
                Val::P(fp(&x, &y))
            }
            (Val::S(x), Val::P(y)) => Val::P(fp(&NcPoly::scalar(y.alphabet(), x), &y)),
            (Val::P(x), Val::S(y)) => Val::P(fp(&x, &NcPoly::scalar(x.alphabet(), y))),
        })
    }
}

fn run(src: &str, ctx: &Context) -> Result<Val, ParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(ParseError { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, at: 0, end: src.len(), ctx };
    let v = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_scalar(src: &str) -> Result<Scalar, ParseError> {
    match run(src, &Context::scalars())? {
        Val::S(s) => Ok(s),
        Val::P(_) => Err(ParseError { pos: 0, msg: "expected a scalar".into() }),
    }
}

pub fn parse_poly(src: &str, alpha: &Arc<Alphabet>) -> Result<NcPoly, ParseError> {
    parse_with(src, &Context::over(alpha))
}

pub fn parse_with(src: &str, ctx: &Context) -> Result<NcPoly, ParseError> {
    let alpha = ctx.alphabet.as_ref().ok_or(ParseError { pos: 0, msg: "no alphabet".into() })?;
    match run(src, ctx)? {
        Val::S(s) => Ok(NcPoly::scalar(alpha, s)),
        Val::P(p) => Ok(p),
    }
}
