//! Tiny hand-rolled scanners for the text forms, with position-carrying errors.

use crate::{Error, Result};

pub(crate) struct Scanner<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    pub fn new(src: &'a str) -> Self {
        Scanner { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn done(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    pub fn expect(&mut self, token: &str) -> Result<()> {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    pub fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub fn int(&mut self) -> Result<i64> {
        let rest = self.rest();
        let mut len = 0;
        let bytes = rest.as_bytes();
        if len < bytes.len() && (bytes[len] == b'-' || bytes[len] == b'+') {
            len += 1;
        }
        let digits_start = len;
        while len < bytes.len() && bytes[len].is_ascii_digit() {
            len += 1;
        }
        if len == digits_start {
            return Err(self.error("expected integer"));
        }
        let val: i64 = rest[..len]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos += len;
        Ok(val)
    }

    /// Comma-separated integers until `close` (not consumed by the list loop).
    pub fn int_list_until(&mut self, close: &str) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        if self.rest().starts_with(close) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if !self.eat(",") {
                break;
            }
        }
        Ok(out)
    }

    pub fn finish(&self) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}
