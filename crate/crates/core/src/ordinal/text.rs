//! Text form of ordinals.
//!
//! ```text
//! sum     := product ('+' sum)?
//! product := power ('*' power)*
//! power   := atom ('^' power)?
//! atom    := digits | 'w' | 'eps0' | 'G0' | 'phi(' sum ',' sum ')' | '(' sum ')'
//! ```
//!
//! Expressions are evaluated while parsing, so any input prints back in
//! normal form.

use super::{Ordinal, OrdinalError, VTerm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseOrdinalError {
    #[error("unexpected input at byte {0}")]
    Syntax(usize),
    #[error("unexpected end of input")]
    Eof,
    #[error("arithmetic error: {0}")]
    Arithmetic(#[from] OrdinalError),
}

pub(crate) fn print(x: &Ordinal) -> String {
    let mut out = String::new();
    write_ordinal(&mut out, x);
    out
}

fn write_ordinal(out: &mut String, x: &Ordinal) {
    match x {
        Ordinal::Zero => out.push('0'),
        Ordinal::Gamma0 => out.push_str("G0"),
        Ordinal::Sum(ts) => {
            for (i, t) in ts.iter().enumerate() {
                if i > 0 {
                    out.push('+');
                }
                write_term(out, t);
            }
        }
    }
}

fn write_term(out: &mut String, t: &VTerm) {
    if t.is_one() {
        out.push_str(&t.m.to_string());
        return;
    }
    if t.a.is_zero() {
        if t.b.as_finite() == Some(1) {
            out.push('w');
        } else {
            out.push_str("w^");
            let atomic = t.b.is_finite() || t.b.as_principal().is_some();
            if atomic {
                write_ordinal(out, &t.b);
            } else {
                out.push('(');
                write_ordinal(out, &t.b);
                out.push(')');
            }
        }
    } else {
        out.push_str("phi(");
        write_ordinal(out, &t.a);
        out.push(',');
        write_ordinal(out, &t.b);
        out.push(')');
    }
    if t.m > 1 {
        out.push('*');
        out.push_str(&t.m.to_string());
    }
}

pub(crate) fn parse(s: &str) -> Result<Ordinal, ParseOrdinalError> {
    let mut p = Parser::new(s);
    let x = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseOrdinalError::Syntax(p.pos));
    }
    Ok(x)
}

/// Parses the longest ordinal expression at the start of `s` and returns it
/// together with the number of bytes consumed.
pub(crate) fn parse_prefix(s: &str) -> Result<(Ordinal, usize), ParseOrdinalError> {
    let mut p = Parser::new(s);
    let x = p.sum()?;
    p.skip_ws();
    Ok((x, p.pos))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
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

    fn expect(&mut self, c: u8) -> Result<(), ParseOrdinalError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(_) => Err(ParseOrdinalError::Syntax(self.pos)),
            None => Err(ParseOrdinalError::Eof),
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(kw.as_bytes()) {
            self.pos += kw.len();
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let left = self.product()?;
        if self.eat(b'+') {
            let right = self.sum()?;
            return Ok(left.add(&right)?);
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let mut acc = self.power()?;
        while self.eat(b'*') {
            let r = self.power()?;
            acc = acc.mul(&r)?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.power()?;
            return Ok(base.exp(&e)?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let Some(c) = self.peek() else {
            return Err(ParseOrdinalError::Eof);
        };
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let n: u64 = digits
                .parse()
                .map_err(|_| ParseOrdinalError::Arithmetic(OrdinalError::CoefficientOverflow))?;
            return Ok(Ordinal::nat(n));
        }
        if self.keyword("eps0") {
            return Ok(Ordinal::epsilon0());
        }
        if self.keyword("G0") {
            return Ok(Ordinal::Gamma0);
        }
        if self.keyword("phi") {
            self.expect(b'(')?;
            let a = self.sum()?;
            self.expect(b',')?;
            let b = self.sum()?;
            self.expect(b')')?;
            return Ok(Ordinal::veblen(&a, &b)?);
        }
        if self.eat(b'w') {
            return Ok(Ordinal::omega());
        }
        if self.eat(b'(') {
            let x = self.sum()?;
            self.expect(b')')?;
            return Ok(x);
        }
        Err(ParseOrdinalError::Syntax(self.pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_prints() {
        let cases = [
            ("0", "0"),
            ("  7 ", "7"),
            ("w", "w"),
            ("w+1", "w+1"),
            ("w*5", "w*5"),
            ("w^2*3+w+4", "w^2*3+w+4"),
            ("w^w^2", "w^w^2"),
            ("w^(w*2)", "w^(w*2)"),
            ("eps0", "phi(1,0)"),
            ("phi(0,3)", "w^3"),
            ("phi(1,0)+phi(1,0)", "phi(1,0)*2"),
            ("G0", "G0"),
            ("1+w", "w"),
            ("2^w", "w"),
            ("phi(0, eps0)", "phi(1,0)"),
        ];
        for (src, want) in cases {
            assert_eq!(parse(src).unwrap().to_string(), want, "{src}");
        }
    }

    #[test]
    fn precedence() {
        // ^ binds tighter than *, * tighter than +
        assert_eq!(parse("w^2*3").unwrap(), parse("(w^2)*3").unwrap());
        assert_eq!(parse("w+w*2").unwrap(), parse("w*3").unwrap());
        assert_eq!(parse("w^w^w").unwrap(), parse("w^(w^w)").unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("w+"), Err(ParseOrdinalError::Eof)));
        assert!(matches!(parse("w)"), Err(ParseOrdinalError::Syntax(1))));
        assert!(matches!(parse("x"), Err(ParseOrdinalError::Syntax(0))));
        assert_eq!(
            parse("G0+1"),
            Err(ParseOrdinalError::Arithmetic(OrdinalError::OverflowBeyondGamma0))
        );
    }

    #[test]
    fn prefix_stops_at_delimiter() {
        let (x, used) = parse_prefix("phi(1,w)+2](x0)").unwrap();
        assert_eq!(x.to_string(), "phi(1,w)+2");
        assert_eq!(used, 10);
    }
}
