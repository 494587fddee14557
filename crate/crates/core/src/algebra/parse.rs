//! Reader for the canonical text form (and any expression in q, t, z built
//! from `+ - * / ^` and parentheses).

use super::cyclo::CycloScalar;
use super::qtrational::QTRational;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Parses an expression in q, t and z (z = ζ_e) into a reduced rational function.
pub fn parse_qt(src: &str, e: u32) -> Result<QTRational> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, e };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    e: u32,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of {:?}", self.pos, String::from_utf8_lossy(self.s)))
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

    fn expr(&mut self) -> Result<QTRational> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QTRational> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    acc = acc.checked_div(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<QTRational> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let k = self.integer()?;
            let k: i64 = k.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.pow(if neg { -k } else { k });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<QTRational> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                Ok(QTRational::q())
            }
            Some(b't') => {
                self.pos += 1;
                Ok(QTRational::t())
            }
            Some(b'z') => {
                self.pos += 1;
                Ok(QTRational::from_scalar(CycloScalar::zeta(self.e)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QTRational::from_rational(BigRational::from_integer(n)))
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        for s in ["t^3*q + t*q", "(q - 1)/(t - 1)", "1/t^3", "-2/3*t*q^2 + 5", "0"] {
            let v = parse_qt(s, 1).unwrap();
            assert_eq!(v.to_text(), s);
        }
        let v = parse_qt("(1 - z)*t + z", 3).unwrap();
        assert_eq!(parse_qt(&v.to_text(), 3).unwrap(), v);
        assert!(parse_qt("q +", 1).is_err());
        assert!(parse_qt("1/(q-q)", 1).is_err());
    }
}
