//! Polynomial expression parser: `+ - * ^ ( )`, integer and rational
//! constants, ring variables and the field generator. `*` may be omitted
//! between adjacent factors.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, col)),
            '-' => out.push((Tok::Minus, col)),
            '*' => out.push((Tok::Star, col)),
            '/' => out.push((Tok::Slash, col)),
            '^' => out.push((Tok::Caret, col)),
            '(' => out.push((Tok::LParen, col)),
            ')' => out.push((Tok::RParen, col)),
            ',' => out.push((Tok::Comma, col)),
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Num(s.parse().unwrap()), col));
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                continue;
            }
            other => {
                return Err(Error::Syntax { line: 1, column: col, message: format!("unexpected character `{other}`") })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax { line: 1, column: self.col(), message: message.into() }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?)?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division only by nonzero constants"));
                    }
                    let inv = self.ring.field().inv(d.leading_coeff().unwrap())?;
                    acc = acc.scale(&inv);
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::ExponentOverflow)?;
                    if e > u16::MAX as u32 {
                        return Err(Error::ExponentOverflow);
                    }
                    return base.pow(e);
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.ring, self.ring.field().from_bigint(&n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(v) = self.ring.var_named(&name) {
                    return Ok(v);
                }
                let field: &FieldSpec = self.ring.field();
                if field.generator_name() == Some(name.as_str()) {
                    return Ok(Polynomial::constant(self.ring, field.generator().unwrap()));
                }
                Err(Error::UndeclaredVariable { line: 1, column: col, name })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser { ring, toks, pos: 0, end_col: text.chars().count() + 1 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

pub(crate) fn parse_polynomial_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    let toks = lex(text)?;
    let mut p = Parser { ring, toks, pos: 0, end_col: text.chars().count() + 1 };
    let mut out = vec![p.expr()?];
    while p.peek() == Some(&Tok::Comma) {
        p.pos += 1;
        out.push(p.expr()?);
    }
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use crate::error::Error;
    use crate::ring::RingCtx;

    #[test]
    fn implicit_multiplication_and_rationals() {
        let r = RingCtx::rational(&["x", "y"]);
        assert_eq!(r.parse("2x y").unwrap(), r.parse("2*x*y").unwrap());
        assert_eq!(r.parse("x/2 + x/2").unwrap(), r.parse("x").unwrap());
        assert_eq!(r.parse("-(x-y)^2").unwrap().to_string(), "-x^2+2*x*y-y^2");
    }

    #[test]
    fn errors_carry_columns() {
        let r = RingCtx::rational(&["x", "y"]);
        assert!(matches!(r.parse("x + q"), Err(Error::UndeclaredVariable { column: 5, .. })));
        assert!(matches!(r.parse("x + "), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x ^ y"), Err(Error::Syntax { .. })));
    }
}
