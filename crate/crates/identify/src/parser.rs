//! Recursive-descent parser for the textual space grammar.
//!
//! ```text
//! expr   := "(" expr ("opi" | "oeps") expr ")"
//!         | "L" exp [w] | "C0" [w] | "FL" exp [w] | "M" exp "," exp [tfw] | "Q" num
//!         | "W(" expr "," ("l" exp | "linf" | "linf0") [w] ")"
//!         | ("F" | "Finv" | "Mod" | "Dual") "(" expr ")"
//!         | ("TensorPi" | "TensorEps") "(" expr "," expr ")"
//! exp    := num | "inf" | "inf0"
//! w      := "[" num "]"
//! tfw    := "[" num "," num "]" | "[" "rad" num "]"
//! ```

use crate::ast::*;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

pub fn parse(src: &str) -> PResult<SpaceExpr> {
    let mut p = Parser { s: src.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.ws();
    if p.pos < p.s.len() {
        return p.fail("trailing input");
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self, msg: &str) -> PResult<T> {
        let message = if self.pos >= self.s.len() {
            format!("{msg} (unexpected end of input)")
        } else {
            msg.to_string()
        };
        Err(ParseError { offset: self.pos, message })
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> String {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn number(&mut self, signed: bool) -> PResult<f64> {
        self.ws();
        let start = self.pos;
        if signed && matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.') {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        match txt.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => {
                self.pos = start;
                self.fail("expected a number")
            }
        }
    }

    /// Exponent after a prefix; `inf` was consumed when `after_inf` is set.
    fn exponent(&mut self, after_inf: bool) -> PResult<Exponent> {
        if after_inf {
            if self.s.get(self.pos) == Some(&b'0') {
                self.pos += 1;
                return Ok(Exponent::Inf0);
            }
            return Ok(Exponent::Inf);
        }
        let at = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            let id = self.ident();
            if id == "inf" {
                return self.exponent(true);
            }
            self.pos = at;
            return self.fail("expected an exponent");
        }
        let p = self.number(false)?;
        if p < 1.0 {
            self.pos = at;
            return self.fail("exponent must be >= 1");
        }
        Ok(Exponent::Finite(p))
    }

    fn weight(&mut self) -> PResult<WeightExpr> {
        if self.peek() == Some(b'[') {
            self.pos += 1;
            let s = self.number(true)?;
            self.expect(b']')?;
            Ok(WeightExpr(s))
        } else {
            Ok(WeightExpr::UNIT)
        }
    }

    fn tf_weight(&mut self) -> PResult<TfWeight> {
        if self.peek() != Some(b'[') {
            return Ok(TfWeight::Tensor(WeightExpr::UNIT, WeightExpr::UNIT));
        }
        self.pos += 1;
        let at = self.pos;
        if self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            if self.ident() != "rad" {
                self.pos = at;
                return self.fail("unknown weight token");
            }
            let s = self.number(true)?;
            self.expect(b']')?;
            return Ok(TfWeight::Radial(WeightExpr(s)));
        }
        let a = self.number(true)?;
        self.expect(b',')?;
        let b = self.number(true)?;
        self.expect(b']')?;
        Ok(TfWeight::Tensor(WeightExpr(a), WeightExpr(b)))
    }

    fn wrapped(&mut self) -> PResult<SpaceExpr> {
        self.expect(b'(')?;
        let e = self.expr()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn global(&mut self) -> PResult<(Exponent, WeightExpr)> {
        let at = self.pos;
        let id = self.ident();
        let p = match id.as_str() {
            "l" => self.exponent(false)?,
            "linf" => self.exponent(true)?,
            _ => {
                self.pos = at;
                self.ws();
                return self.fail("expected a sequence space (l<p>, linf, linf0)");
            }
        };
        Ok((p, self.weight()?))
    }

    fn expr(&mut self) -> PResult<SpaceExpr> {
        match self.peek() {
            None => return self.fail("expected an expression"),
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                let at = self.pos;
                let op = self.ident();
                let pi = match op.as_str() {
                    "opi" => true,
                    "oeps" => false,
                    _ => {
                        self.pos = at;
                        self.ws();
                        return self.fail("expected 'opi' or 'oeps'");
                    }
                };
                let b = self.expr()?;
                self.expect(b')')?;
                let (a, b) = (Box::new(a), Box::new(b));
                return Ok(if pi { TensorPi(a, b) } else { TensorEps(a, b) });
            }
            Some(c) if c.is_ascii_alphabetic() => {}
            Some(_) => return self.fail("unexpected character"),
        }
        let start = self.pos;
        let id = self.ident();
        match id.as_str() {
            "L" => {
                let p = self.exponent(false)?;
                Ok(Lp(p, self.weight()?))
            }
            "Linf" => {
                let p = self.exponent(true)?;
                Ok(Lp(p, self.weight()?))
            }
            "FL" => {
                let p = self.exponent(false)?;
                Ok(fl(Lp(p, self.weight()?)))
            }
            "FLinf" => {
                let p = self.exponent(true)?;
                Ok(fl(Lp(p, self.weight()?)))
            }
            "C" => {
                if self.s.get(self.pos) != Some(&b'0') {
                    return self.fail("expected 'C0'");
                }
                self.pos += 1;
                Ok(C0(self.weight()?))
            }
            "M" | "Minf" => {
                let p = self.exponent(id == "Minf")?;
                self.expect(b',')?;
                let q = self.exponent(false)?;
                Ok(Mpq(p, q, self.tf_weight()?))
            }
            "Q" => Ok(Qs(self.number(true)?)),
            "W" => {
                self.expect(b'(')?;
                let e = self.expr()?;
                self.expect(b',')?;
                let (p, w) = self.global()?;
                self.expect(b')')?;
                Ok(Amalgam(Box::new(e), p, w))
            }
            "F" => Ok(FL(Box::new(self.wrapped()?))),
            "Finv" => Ok(FLinv(Box::new(self.wrapped()?))),
            "Mod" => Ok(Mod(Box::new(self.wrapped()?))),
            "Dual" => Ok(Dual(Box::new(self.wrapped()?))),
            "TensorPi" | "TensorEps" => {
                self.expect(b'(')?;
                let a = Box::new(self.expr()?);
                self.expect(b',')?;
                let b = Box::new(self.expr()?);
                self.expect(b')')?;
                Ok(if id == "TensorPi" { TensorPi(a, b) } else { TensorEps(a, b) })
            }
            _ => {
                self.pos = start;
                self.fail(&format!("unknown token '{id}'"))
            }
        }
    }
}
