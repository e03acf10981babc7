//! Text form of terms and formulas.
//!
//! Connectives from loosest to tightest: `<->`, `->` (right associative),
//! `|`, `&`, then the prefix forms `~`, `forall xk.` and `exists xk.`.
//! Term operators are `+` below `*`, both left associative. Small numerals
//! print as successor chains and larger ones in decimal; both forms parse.

use std::fmt;

use num_bigint::BigUint;

use super::formula::{Formula, PrRel};
use super::term::{PrFun, Term};
use crate::ordinal::{parse_prefix, OrdinalCode};

/// Numerals below this bound print as `S(…S(0)…)`.
const UNARY_LIMIT: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

fn write_term(out: &mut String, t: &Term, ctx: u8) {
    match t {
        Term::Var(i) => out.push_str(&format!("x{i}")),
        Term::Num(n) => {
            if *n < BigUint::from(UNARY_LIMIT) {
                let k: u32 = n.try_into().unwrap();
                for _ in 0..k {
                    out.push_str("S(");
                }
                out.push('0');
                for _ in 0..k {
                    out.push(')');
                }
            } else {
                out.push_str(&n.to_string());
            }
        }
        Term::Succ(s) => {
            out.push_str("S(");
            write_term(out, s, 0);
            out.push(')');
        }
        Term::Add(a, b) => {
            if ctx > 0 {
                out.push('(');
            }
            write_term(out, a, 0);
            out.push_str(" + ");
            write_term(out, b, 1);
            if ctx > 0 {
                out.push(')');
            }
        }
        Term::Mul(a, b) => {
            if ctx > 1 {
                out.push('(');
            }
            write_term(out, a, 1);
            out.push_str(" * ");
            write_term(out, b, 2);
            if ctx > 1 {
                out.push(')');
            }
        }
        Term::Fun(f, args) => write_call(out, f.name(), args),
    }
}

fn write_call(out: &mut String, name: &str, args: &[Term]) {
    out.push_str(name);
    out.push('(');
    for (i, a) in args.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        write_term(out, a, 0);
    }
    out.push(')');
}

/// `T` index as an ordinal literal when valid, `#n` otherwise.
pub fn print_index(c: &OrdinalCode) -> String {
    match c.decode() {
        Some(x) => x.to_string(),
        None => format!("#{c}"),
    }
}

fn write_formula(out: &mut String, f: &Formula, ctx: u8) {
    let binary = |out: &mut String, me: u8, l: &Formula, lp: u8, op: &str, r: &Formula, rp: u8| {
        if ctx > me {
            out.push('(');
        }
        write_formula(out, l, lp);
        out.push_str(op);
        write_formula(out, r, rp);
        if ctx > me {
            out.push(')');
        }
    };
    match f {
        Formula::Iff(a, b) => binary(out, 0, a, 1, " <-> ", b, 1),
        Formula::Implies(a, b) => binary(out, 1, a, 2, " -> ", b, 1),
        Formula::Or(a, b) => binary(out, 2, a, 2, " | ", b, 3),
        Formula::And(a, b) => binary(out, 3, a, 3, " & ", b, 4),
        Formula::Not(a) => {
            out.push('~');
            write_formula(out, a, 4);
        }
        Formula::ForAll(v, a) => {
            out.push_str(&format!("forall x{v}. "));
            write_formula(out, a, 4);
        }
        Formula::Exists(v, a) => {
            out.push_str(&format!("exists x{v}. "));
            write_formula(out, a, 4);
        }
        Formula::Eq(a, b) => {
            write_term(out, a, 0);
            out.push_str(" = ");
            write_term(out, b, 0);
        }
        Formula::Truth { level, index, arg } => {
            out.push_str(&format!("T[{level},{}](", print_index(index)));
            write_term(out, arg, 0);
            out.push(')');
        }
        Formula::SimpleTruth { level, arg } => {
            out.push_str(&format!("T[{level}]("));
            write_term(out, arg, 0);
            out.push(')');
        }
        Formula::Acc { level, arg } => {
            out.push_str(&format!("Acc[{level}]("));
            write_term(out, arg, 0);
            out.push(')');
        }
        Formula::Rel(r, args) => write_call(out, r.name(), args),
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_term(&mut s, self, 0);
        f.write_str(&s)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_formula(&mut s, self, 0);
        f.write_str(&s)
    }
}

pub fn parse_formula(s: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    let f = p.iff()?;
    p.finish()?;
    Ok(f)
}

pub fn parse_term(s: &str) -> Result<Term, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

/// A truth index: an ordinal literal or `#<natural>` for a raw code.
pub fn parse_index(s: &str) -> Result<OrdinalCode, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    let c = p.index()?;
    p.finish()?;
    Ok(c)
}

impl std::str::FromStr for Formula {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

impl std::str::FromStr for Term {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected `{tok}`"))
        }
    }

    fn peek_ident(&mut self) -> Option<&str> {
        self.skip_ws();
        let r = self.rest();
        let first = r.chars().next()?;
        if !first.is_ascii_alphabetic() {
            return None;
        }
        let end = r
            .find(|c: char| !c.is_ascii_alphanumeric() && c != '_')
            .unwrap_or(r.len());
        Some(&r[..end])
    }

    fn natural(&mut self) -> Result<BigUint, ParseError> {
        self.skip_ws();
        let r = self.rest();
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return self.err("expected a natural number");
        }
        let n = r[..end].parse().expect("digits");
        self.pos += end;
        Ok(n)
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let n = self.natural()?;
        match u32::try_from(&n) {
            Ok(k) => Ok(k),
            Err(_) => self.err("number too large"),
        }
    }

    fn var_index(&mut self) -> Result<u32, ParseError> {
        match self.peek_ident() {
            Some(id) if id.len() > 1 && id.starts_with('x') && id[1..].bytes().all(|b| b.is_ascii_digit()) => {
                let k = id[1..].parse::<u32>();
                let len = id.len();
                match k {
                    Ok(k) => {
                        self.pos += len;
                        Ok(k)
                    }
                    Err(_) => self.err("variable index too large"),
                }
            }
            _ => self.err("expected a variable"),
        }
    }

    fn index(&mut self) -> Result<OrdinalCode, ParseError> {
        if self.eat("#") {
            return Ok(OrdinalCode(self.natural()?));
        }
        self.skip_ws();
        match parse_prefix(self.rest()) {
            Ok((x, used)) => {
                self.pos += used;
                Ok(OrdinalCode::encode(&x))
            }
            Err(e) => self.err(format!("bad ordinal: {e}")),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let a = self.imp()?;
        if self.eat("<->") {
            let b = self.imp()?;
            return Ok(Formula::iff(a, b));
        }
        Ok(a)
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let a = self.or()?;
        if self.eat("->") {
            let b = self.imp()?;
            return Ok(Formula::implies(a, b));
        }
        Ok(a)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.and()?;
        while self.eat("|") {
            a = Formula::or(a, self.and()?);
        }
        Ok(a)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut a = self.unary()?;
        while self.eat("&") {
            a = Formula::and(a, self.unary()?);
        }
        Ok(a)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat("~") {
            return Ok(Formula::not(self.unary()?));
        }
        match self.peek_ident() {
            Some(q @ ("forall" | "exists")) => {
                let universal = q == "forall";
                self.pos += q.len();
                let v = self.var_index()?;
                self.expect(".")?;
                let body = self.unary()?;
                Ok(if universal {
                    Formula::forall(v, body)
                } else {
                    Formula::exists(v, body)
                })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let ident = self.peek_ident().map(str::to_string);
        match ident.as_deref() {
            Some("T") => {
                self.pos += 1;
                self.expect("[")?;
                let level = self.level()?;
                let index = if self.eat(",") { Some(self.index()?) } else { None };
                self.expect("]")?;
                let arg = self.paren_term()?;
                return Ok(match index {
                    Some(index) => Formula::Truth { level, index, arg },
                    None => Formula::SimpleTruth { level, arg },
                });
            }
            Some("Acc") => {
                self.pos += 3;
                self.expect("[")?;
                let level = self.level()?;
                self.expect("]")?;
                let arg = self.paren_term()?;
                return Ok(Formula::Acc { level, arg });
            }
            Some(name) => {
                if let Some(r) = PrRel::from_name(name) {
                    self.pos += name.len();
                    let args = self.args(r.arity())?;
                    return Ok(Formula::Rel(r, args));
                }
            }
            None => {}
        }
        self.skip_ws();
        if self.rest().starts_with('(') {
            let save = self.pos;
            if let Ok(f) = self.equation() {
                return Ok(f);
            }
            self.pos = save;
            self.expect("(")?;
            let f = self.iff()?;
            self.expect(")")?;
            return Ok(f);
        }
        self.equation()
    }

    fn level(&mut self) -> Result<u32, ParseError> {
        let k = self.small()?;
        if k == 0 {
            return self.err("levels start at one");
        }
        Ok(k)
    }

    fn equation(&mut self) -> Result<Formula, ParseError> {
        let a = self.term()?;
        self.expect("=")?;
        let b = self.term()?;
        Ok(Formula::Eq(a, b))
    }

    fn paren_term(&mut self) -> Result<Term, ParseError> {
        self.expect("(")?;
        let t = self.term()?;
        self.expect(")")?;
        Ok(t)
    }

    fn args(&mut self, n: usize) -> Result<Vec<Term>, ParseError> {
        self.expect("(")?;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            if i > 0 {
                self.expect(",")?;
            }
            out.push(self.term()?);
        }
        self.expect(")")?;
        Ok(out)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut a = self.product()?;
        while self.eat("+") {
            a = Term::add(a, self.product()?);
        }
        Ok(a)
    }

    fn product(&mut self) -> Result<Term, ParseError> {
        let mut a = self.term_atom()?;
        while self.eat("*") {
            a = Term::mul(a, self.term_atom()?);
        }
        Ok(a)
    }

    fn term_atom(&mut self) -> Result<Term, ParseError> {
        self.skip_ws();
        if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            return Ok(Term::Num(self.natural()?));
        }
        if self.eat("(") {
            let t = self.term()?;
            self.expect(")")?;
            return Ok(t);
        }
        let Some(id) = self.peek_ident().map(str::to_string) else {
            return self.err("expected a term");
        };
        if id == "S" {
            self.pos += 1;
            return Ok(Term::succ(self.paren_term()?));
        }
        if let Some(f) = PrFun::from_name(&id) {
            self.pos += id.len();
            return Ok(Term::Fun(f, self.args(f.arity())?));
        }
        Ok(Term::Var(self.var_index()?))
    }
}
