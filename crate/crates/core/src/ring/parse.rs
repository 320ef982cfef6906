// Recursive-descent parser for the polynomial / rational-function grammar.
//
//   ratfunc := poly | "(" poly ")" "/" "(" poly ")"
//   poly    := ["-"] term (("+" | "-") term)*
//   term    := int ["*" "t" ["^" sint]] | "t" ["^" sint]
//
// Whitespace between tokens is ignored. Terms may repeat or come in any order;
// the result is always canonical.

use num_bigint::BigInt;

use super::{LaurentPoly, RatFunc};
use crate::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            src: s.as_bytes(),
            pos: 0,
        }
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

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected exponent"))?;
        let v: i64 = d.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }

    fn power_of_t(&mut self) -> Result<i64> {
        self.expect(b't')?;
        if self.eat(b'^') {
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(BigInt, i64)> {
        match self.peek() {
            Some(b't') => Ok((BigInt::from(1), self.power_of_t()?)),
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let c: BigInt = d.parse().expect("ascii digits");
                if self.eat(b'*') {
                    Ok((c, self.power_of_t()?))
                } else {
                    Ok((c, 0))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero();
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let (c, e) = self.term()?;
            out.add_term(e, c * sign);
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok(out);
            }
        }
    }
}

pub(super) fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor::new(s);
    let p = cur.poly()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(p)
}

pub(super) fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut cur = Cursor::new(s);
    if cur.peek() == Some(b'(') {
        cur.expect(b'(')?;
        let num = cur.poly()?;
        cur.expect(b')')?;
        if cur.at_end() {
            return Ok(RatFunc::from(num));
        }
        cur.expect(b'/')?;
        cur.expect(b'(')?;
        let den_pos = cur.pos;
        let den = cur.poly()?;
        cur.expect(b')')?;
        if !cur.at_end() {
            return Err(cur.error("trailing input"));
        }
        return RatFunc::new(num, den).map_err(|_| Error::SyntaxError {
            pos: den_pos,
            msg: "zero denominator".into(),
        });
    }
    let num = cur.poly()?;
    if !cur.at_end() {
        return Err(cur.error("trailing input"));
    }
    Ok(RatFunc::from(num))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_positions() {
        match parse_laurent("1 + * t") {
            Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        match parse_laurent("2 - t^") {
            Err(Error::SyntaxError { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_laurent("").is_err());
        assert!(parse_laurent("1 2").is_err());
        assert!(parse_ratfunc("(1)/(0)").is_err());
        assert!(parse_ratfunc("(1)/t").is_err());
    }

    #[test]
    fn lenient_input_is_canonicalized() {
        let p = parse_laurent("t+1+t").unwrap();
        assert_eq!(p.to_string(), "1 + 2*t");
        assert_eq!(parse_laurent("3*t^0").unwrap().to_string(), "3");
        assert_eq!(parse_laurent("t^+2").unwrap().to_string(), "t^2");
        assert_eq!(parse_laurent("1 - 1").unwrap().to_string(), "0");
    }
}
