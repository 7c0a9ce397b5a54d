//! Recursive-descent parser for the ASCII polynomial grammar.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := '0' | '1' | 'x' | '(' expr ')' | '0x' hexdigits | '@' name
//! ```
//!
//! `@name` atoms are looked up through a caller-supplied resolver.
//!
//! This accepts the sum, product and hex forms (and mixtures of them).
//! Whitespace is ignored everywhere.

use super::Poly;
use crate::error::{Error, Result};

/// Largest degree a parsed expression may reach.
pub const MAX_PARSED_DEGREE: usize = 1 << 20;

pub type Resolver<'r> = &'r dyn Fn(&str) -> Option<Poly>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    resolve: Option<Resolver<'a>>,
}

pub(super) fn parse(text: &str, resolve: Option<Resolver<'_>>) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, resolve };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty input"));
    }
    let value = p.expr()?;
    p.skip_ws();
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc += &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let start = self.pos;
            let rhs = self.factor()?;
            if let (Some(a), Some(b)) = (acc.degree(), rhs.degree()) {
                if a + b > MAX_PARSED_DEGREE {
                    return Err(Error::ExponentOverflow { pos: start });
                }
            }
            acc = acc.mul(&rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        let exp = self.uint()?;
        let deg = base.degree().unwrap_or(0);
        let too_big =
            usize::try_from(exp).ok().and_then(|e| e.checked_mul(deg)).is_none_or(|d| d > MAX_PARSED_DEGREE);
        if too_big {
            return Err(Error::ExponentOverflow { pos: start });
        }
        Ok(base.pow(exp))
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(c) = self.src.get(self.pos).filter(|c| c.is_ascii_digit()) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .ok_or(Error::ExponentOverflow { pos: start })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an unsigned integer exponent"));
        }
        Ok(value)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Poly::one())
            }
            Some(b'0') => {
                self.pos += 1;
                if self.src.get(self.pos) == Some(&b'x') {
                    self.pos += 1;
                    self.hex()
                } else {
                    Ok(Poly::zero())
                }
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(b'@') => {
                let start = self.pos;
                self.pos += 1;
                while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start + 1..self.pos]).expect("ascii");
                let found = self.resolve.and_then(|r| r(name));
                found.ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown name `@{name}`") })
            }
            Some(_) => Err(self.error("expected `x`, `1`, `0`, `0x...`, `@name` or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn hex(&mut self) -> Result<Poly> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_hexdigit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected hex digits after `0x`"));
        }
        let digits = &self.src[start..self.pos];
        if (digits.len() - 1) * 4 > MAX_PARSED_DEGREE {
            return Err(Error::ExponentOverflow { pos: start });
        }
        let mut limbs = Vec::with_capacity(digits.len().div_ceil(16));
        for chunk in digits.rchunks(16) {
            let s = std::str::from_utf8(chunk).expect("ascii hex digits");
            limbs.push(u64::from_str_radix(s, 16).expect("validated hex digits"));
        }
        Ok(Poly::from_limbs(limbs))
    }
}
