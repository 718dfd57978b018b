//! Curve equation front end.
//!
//! ```text
//! curve   := "y" ["^" INT] "=" [RAT ["*"]] factor { ["*"] factor }
//!          | "y" "^" INT "+" "x" "^" INT "=" "1"
//! factor  := "x" ["^" INT] | "(" "x" ("-" | "+") RAT ")" ["^" INT]
//! RAT     := ["-"] INT ["/" INT]
//! ```
//!
//! Whitespace is ignored. Error positions are byte offsets into the input.

use super::{BranchPoint, CyclicCover, Rational};
use crate::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn error(&mut self, msg: impl Into<String>) -> Error {
        self.skip_ws();
        let found = match self.src.get(self.pos) {
            Some(&c) => format!(", found '{}'", c as char),
            None => ", found end of input".to_string(),
        };
        Error::syntax(self.pos, format!("{}{found}", msg.into()))
    }

    fn unsigned(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::syntax(start, "integer out of range"))
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.unsigned()?;
        Ok(if neg { -v } else { v })
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let at = self.pos;
            let denom = self.unsigned()?;
            if denom == 0 {
                return Err(Error::syntax(at, "zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn optional_power(&mut self) -> Result<i64> {
        if self.eat(b'^') {
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn factor(cur: &mut Cursor) -> Result<(BranchPoint, i64)> {
    if cur.eat(b'x') {
        let k = cur.optional_power()?;
        return Ok((BranchPoint::integer(0), k));
    }
    cur.expect(b'(')?;
    cur.expect(b'x')?;
    let negate = if cur.eat(b'-') {
        false
    } else if cur.eat(b'+') {
        true
    } else {
        return Err(cur.error("expected '-' or '+'"));
    };
    let r = cur.rational()?;
    cur.expect(b')')?;
    let k = cur.optional_power()?;
    Ok((BranchPoint::Rational(if negate { -r } else { r }), k))
}

/// Parses a cyclic cover equation.
pub fn parse_curve(text: &str) -> Result<CyclicCover> {
    let mut cur = Cursor::new(text);
    cur.expect(b'y')?;
    let n_at = cur.pos;
    let n = cur.optional_power()?;
    if n < 2 {
        return Err(Error::domain(format!("cover degree must be >= 2 (at position {n_at})")));
    }
    let n = n as u64;

    if cur.eat(b'+') {
        cur.expect(b'x')?;
        cur.expect(b'^')?;
        let d_at = cur.pos;
        let d = cur.integer()?;
        cur.expect(b'=')?;
        let one_at = cur.pos;
        if cur.integer()? != 1 {
            return Err(Error::syntax(one_at, "Fermat form must read y^n + x^d = 1"));
        }
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        if d < 1 {
            return Err(Error::domain(format!("Fermat degree must be >= 1 (at position {d_at})")));
        }
        return CyclicCover::fermat(n, d as u64);
    }

    cur.expect(b'=')?;
    let mut constant = Rational::from_integer(1);
    match cur.peek() {
        Some(c) if c == b'-' || c.is_ascii_digit() => {
            constant = cur.rational()?;
            cur.eat(b'*');
        }
        _ => {}
    }
    let mut factors = Vec::new();
    loop {
        factors.push(factor(&mut cur)?);
        cur.eat(b'*');
        if cur.at_end() {
            break;
        }
    }
    CyclicCover::with_constant(n, constant, factors)
}
