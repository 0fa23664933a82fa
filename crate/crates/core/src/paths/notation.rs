use std::fmt;

use thiserror::Error;

use super::{PathComponent, PathPosition};

/// Parse failure at byte offset `pos` of the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at column {}: {message}", pos + 1)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    /// The input with a caret under the offending column.
    pub fn render(&self, input: &str) -> String {
        format!("{input}\n{}^ {}", " ".repeat(self.pos), self.message)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn fail<T>(&self, message: impl fmt::Display) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            message: message.to_string(),
        })
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail("expected a number");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.fail("number too large")
        })
    }

    fn component(&mut self) -> Result<PathComponent, ParseError> {
        self.skip_ws();
        if !matches!(self.peek(), Some(b'P' | b'p')) {
            return self.fail("expected a component like P5 or P5^2");
        }
        let start = self.pos;
        self.pos += 1;
        self.skip_ws();
        let k = self.number()?;
        self.skip_ws();
        let c = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let i = self.number()?;
            PathComponent::new(k, i)
        } else if k == 0 {
            PathComponent::new(0, 0)
        } else {
            Ok(PathComponent::standard(k))
        };
        c.or_else(|e| {
            self.pos = start;
            self.fail(e)
        })
    }
}

/// Parses sums such as `P7^0 + P3^2 + P1^1`. Case and spacing are free; a
/// missing exponent means the standard component; `0` is the empty sum.
pub fn parse_position(input: &str) -> Result<PathPosition, ParseError> {
    let mut cur = Cursor {
        s: input.as_bytes(),
        pos: 0,
    };
    cur.skip_ws();
    if cur.peek() == Some(b'0') {
        cur.pos += 1;
        cur.skip_ws();
        return match cur.peek() {
            None => Ok(PathPosition::default()),
            Some(_) => cur.fail("unexpected input after 0"),
        };
    }
    let mut components = vec![cur.component()?];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                components.push(cur.component()?);
            }
            Some(_) => return cur.fail("expected '+' or end of input"),
        }
    }
    Ok(PathPosition::new(components))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let q = parse_position("P7^0 + P3^2 + P1^1").unwrap();
        assert_eq!(q.to_string(), "P1^1 + P3^2 + P7^0");
        assert_eq!(parse_position(&q.to_string()).unwrap(), q);
        assert_eq!(parse_position(" 0 ").unwrap(), PathPosition::default());
    }

    #[test]
    fn defaults_and_spacing() {
        assert_eq!(parse_position("p4+P 1 ").unwrap(), PathPosition::standard(&[4, 1]));
        assert_eq!(parse_position("P4 + p").unwrap_err().pos, 6);
        assert_eq!(parse_position("  P5 ^ 1").unwrap().to_string(), "P5^1");
    }

    #[test]
    fn errors_point_at_the_problem() {
        let e = parse_position("P3 + Q2").unwrap_err();
        assert_eq!(e.pos, 5);
        assert_eq!(e.render("P3 + Q2"), "P3 + Q2\n     ^ expected a component like P5 or P5^2");
        assert_eq!(parse_position("P1^2").unwrap_err().pos, 0);
        assert_eq!(parse_position("P0").unwrap_err().pos, 0);
        assert_eq!(parse_position("P3 P3").unwrap_err().pos, 3);
        assert_eq!(parse_position("").unwrap_err().pos, 0);
        assert_eq!(parse_position("P3 +").unwrap_err().pos, 4);
    }
}
