//! Parser for the law DSL.
//!
//! ```text
//! law  := sign? term (sign term)*
//! term := integer? '*'? expr
//! expr := 'x' digit | '[' expr ',' expr ']'
//! ```
//!
//! Variables are `x1` … `x9`; whitespace is ignored between tokens.

use crate::error::{Error, Result};
use crate::variety::law::{Law, LawTerm};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.error(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.error(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<i64>() {
            Ok(n) => Ok(Some(n)),
            Err(_) => {
                self.pos = start;
                self.error("coefficient out of range")
            }
        }
    }

    fn expr(&mut self) -> Result<LawTerm> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                match self.src.get(self.pos) {
                    Some(d @ b'1'..=b'9') => {
                        self.pos += 1;
                        if matches!(self.src.get(self.pos), Some(b'0'..=b'9')) {
                            return self.error("variables are limited to x1..x9");
                        }
                        Ok(LawTerm::Var((d - b'0') as usize))
                    }
                    _ => self.error("expected a variable index 1-9 after 'x'"),
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(b',')?;
                let r = self.expr()?;
                self.expect(b']')?;
                Ok(LawTerm::bracket(l, r))
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn term(&mut self, sign: i64) -> Result<(i64, LawTerm)> {
        let coeff = self.integer()?.unwrap_or(1);
        if self.peek() == Some(b'*') {
            self.pos += 1;
        }
        let t = self.expr()?;
        Ok((sign * coeff, t))
    }
}

/// Parses a multilinear law such as `"[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]"`.
pub fn parse_law(src: &str) -> Result<Law> {
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut sign = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            -1
        }
        Some(b'+') => {
            cur.pos += 1;
            1
        }
        _ => 1,
    };
    loop {
        terms.push(cur.term(sign)?);
        match cur.peek() {
            None => break,
            Some(b'+') => sign = 1,
            Some(b'-') => sign = -1,
            Some(c) => return cur.error(format!("expected '+' or '-', found '{}'", c as char)),
        }
        cur.pos += 1;
    }
    Law::new(terms)
}
