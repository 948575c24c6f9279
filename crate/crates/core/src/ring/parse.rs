use super::monomial::Monomial;
use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Parses a polynomial written with `+ - * ^`, parentheses, integer
/// coefficients and the ring's variable names, e.g. `3*x0^2*x1-x2^3+5`.
///
/// Errors carry `line: 1`; callers reading files replace it with the real
/// line number.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: text.chars().filter(|c| !c.is_whitespace()).collect(),
        pos: 0,
    };
    if p.chars.is_empty() {
        return Err(p.err("empty expression"));
    }
    let f = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.err(&format!("unexpected character '{}'", p.chars[p.pos])));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            line: 1,
            msg: format!("{msg} (column {})", self.pos + 1),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = s.parse().map_err(|_| self.err("expected exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let f = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.field().p() as u64;
                let mut v = 0u64;
                while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                    v = (v * 10 + d as u64) % p;
                    self.pos += 1;
                }
                Ok(Polynomial::constant(self.ring, v as u32))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::monomial(self.ring, 1, Monomial::var(i))),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(c) => Err(self.err(&format!("unexpected character '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, SeededRng};
    use crate::ring::random::random_form;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::new(PrimeField::new(10007).unwrap(), 4).unwrap()
    }

    #[test]
    fn parses_expressions() {
        let r = ring();
        let f = parse_polynomial(&r, "(x0+x1)*(x0-x1)").unwrap();
        assert_eq!(f, parse_polynomial(&r, "x0^2 - x1^2").unwrap());
        let g = parse_polynomial(&r, "-3*x2^3 + 10008").unwrap();
        assert_eq!(g.to_string(), "-3*x2^3+1");
    }

    #[test]
    fn reports_errors() {
        let r = ring();
        assert!(matches!(parse_polynomial(&r, "x9"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "x0+"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, "(x0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial(&r, ""), Err(Error::Parse { .. })));
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(seed in 0u64..500, d in 0i32..5) {
            let r = ring();
            let mut rng = SeededRng::from_seed(seed);
            let f = random_form(&r, d, &mut rng).unwrap();
            let g = parse_polynomial(&r, &f.to_string()).unwrap();
            prop_assert_eq!(f, g);
        }
    }
}
