//! Hilbert-style proofs: objects, checking and generated templates.
//!
//! A proof is a list of lines, each a formula with a justification. Line
//! references point strictly backwards and the last line is the theorem.

mod build;
mod check;
mod logic;
mod templates;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::bits::{BitReader, BitWriter};
use crate::syntax::{parse_formula, read_formula, write_formula, Formula};

pub use check::{check, LineFault, ProofError};
pub use logic::LogicScheme;
pub use templates::{omega_tower, template_jump_base, template_prog_numeral, TemplateError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Justification {
    LogicAxiom(LogicScheme),
    NonlogicalAxiom,
    /// A closed designated atom, or its negation, confirmed by evaluation.
    Computation,
    /// `ModusPonens(i, j)`: line `i` is `P` and line `j` is `P → Q`.
    ModusPonens(u32, u32),
    /// `Generalization(i, x)`: from line `i` infer `∀x` of it.
    Generalization(u32, u32),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::LogicAxiom(s) => write!(f, "LA:{s}"),
            Justification::NonlogicalAxiom => f.write_str("AX"),
            Justification::Computation => f.write_str("COMP"),
            Justification::ModusPonens(i, j) => write!(f, "MP {i} {j}"),
            Justification::Generalization(i, x) => write!(f, "GEN {i} x{x}"),
        }
    }
}

impl FromStr for Justification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let num = |w: &str| w.parse::<u32>().map_err(|_| format!("bad line reference `{w}`"));
        match words.as_slice() {
            ["AX"] => Ok(Justification::NonlogicalAxiom),
            ["COMP"] => Ok(Justification::Computation),
            [la] if la.starts_with("LA:") => la[3..]
                .parse()
                .map(Justification::LogicAxiom)
                .map_err(|_| format!("unknown logic scheme `{}`", &la[3..])),
            ["MP", i, j] => Ok(Justification::ModusPonens(num(i)?, num(j)?)),
            ["GEN", i, x] => {
                let v = x
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .ok_or_else(|| format!("bad variable `{x}`"))?;
                Ok(Justification::Generalization(num(i)?, v))
            }
            _ => Err(format!("unknown justification `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Proof {
    pub lines: Vec<Line>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("proof file line {line}: {msg}")]
pub struct ProofParseError {
    pub line: usize,
    pub msg: String,
}

impl Proof {
    pub fn new(lines: Vec<Line>) -> Self {
        Proof { lines }
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn encode(&self) -> BigUint {
        let mut w = BitWriter::new();
        w.natural_u64(self.lines.len() as u64);
        for l in &self.lines {
            write_formula(&mut w, &l.formula);
            match l.justification {
                Justification::LogicAxiom(s) => {
                    w.bits(0, 3);
                    w.natural_u64(s.id());
                }
                Justification::NonlogicalAxiom => w.bits(1, 3),
                Justification::Computation => w.bits(2, 3),
                Justification::ModusPonens(i, j) => {
                    w.bits(3, 3);
                    w.natural_u64(i.into());
                    w.natural_u64(j.into());
                }
                Justification::Generalization(i, x) => {
                    w.bits(4, 3);
                    w.natural_u64(i.into());
                    w.natural_u64(x.into());
                }
            }
        }
        w.finish()
    }

    pub fn decode(n: &BigUint) -> Option<Proof> {
        let mut r = BitReader::new(n)?;
        let len = r.natural_u64()?;
        let mut lines = Vec::new();
        for _ in 0..len {
            let formula = read_formula(&mut r, 0)?;
            let justification = match r.bits(3)? {
                0 => Justification::LogicAxiom(LogicScheme::from_id(r.natural_u64()?)?),
                1 => Justification::NonlogicalAxiom,
                2 => Justification::Computation,
                3 => Justification::ModusPonens(r.natural_u32()?, r.natural_u32()?),
                4 => Justification::Generalization(r.natural_u32()?, r.natural_u32()?),
                _ => return None,
            };
            lines.push(Line { formula, justification });
        }
        r.at_end().then_some(Proof { lines })
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "#{i} {} ; {}", l.formula, l.justification)?;
        }
        Ok(())
    }
}

impl FromStr for Proof {
    type Err = ProofParseError;

    /// Reads the `#<idx> <formula> ; <justification>` file format. Blank
    /// lines are skipped; indices must count up from zero.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut lines = Vec::new();
        for (no, raw) in s.lines().enumerate() {
            let err = |msg: String| ProofParseError { line: no + 1, msg };
            let text = raw.trim();
            if text.is_empty() {
                continue;
            }
            let rest = text
                .strip_prefix('#')
                .ok_or_else(|| err("expected `#<index>`".into()))?;
            let (idx, rest) = rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("missing formula".into()))?;
            if idx.parse::<usize>().ok() != Some(lines.len()) {
                return Err(err(format!("expected index {}, found `{idx}`", lines.len())));
            }
            let (formula, just) = rest
                .rsplit_once(';')
                .ok_or_else(|| err("missing `; <justification>`".into()))?;
            let formula = parse_formula(formula.trim()).map_err(|e| err(e.to_string()))?;
            let justification = just.trim().parse().map_err(err)?;
            lines.push(Line { formula, justification });
        }
        Ok(Proof { lines })
    }
}
