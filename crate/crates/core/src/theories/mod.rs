//! The hierarchy of truth theories over arithmetic.
//!
//! A [`TheorySpec`] names one theory; [`axiom_check`] decides its axioms and
//! [`axiom_enumerate`] lists them. Iterates `tord^n` are unfolded into nested
//! `tord` before any semantic use, so `tord^1(θ)` and `tord(θ)` are the same
//! theory in every respect, including their codes.

mod axioms;
mod eval;
mod predicates;

use std::fmt;

use num_bigint::BigUint;

use crate::bits::{BitReader, BitWriter};
use crate::ordinal::{OrdinalCode, OrdinalError};
use crate::syntax::{Layer, LanguageId};

pub use axioms::{
    axiom_check, axiom_enumerate, check_omega_iterate, AxiomGroup, AxiomStream, Rejection,
};
pub use eval::{eval_atom, eval_term, FENUM_LIMIT};
pub use predicates::{
    mk_b, mk_c, mk_jump, mk_prog, mk_prog_upto, mk_shift, statement_of, Statement, StatementOutput,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoryError {
    #[error("ordinal index is not a valid ordinal code")]
    InvalidCode,
    #[error("iteration count must be at least one")]
    ZeroIterations,
    #[error("formula does not have exactly one free variable")]
    NotAPredicate,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("formula is not in the required language")]
    LanguageMismatch,
    #[error(transparent)]
    Ordinal(#[from] OrdinalError),
    #[error("malformed theory descriptor: {0}")]
    Descriptor(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TheorySpec {
    PA,
    Tarski(Box<TheorySpec>),
    SubsystemS(Box<TheorySpec>, OrdinalCode),
    TarskiOrd(Box<TheorySpec>),
    TarskiIter(Box<TheorySpec>, u32),
}

impl TheorySpec {
    pub fn pa() -> Self {
        TheorySpec::PA
    }

    pub fn tarski(inner: TheorySpec) -> Self {
        TheorySpec::Tarski(Box::new(inner))
    }

    pub fn subsystem(inner: TheorySpec, a: OrdinalCode) -> Result<Self, TheoryError> {
        if !a.is_valid() {
            return Err(TheoryError::InvalidCode);
        }
        Ok(TheorySpec::SubsystemS(Box::new(inner), a))
    }

    pub fn tarski_ord(inner: TheorySpec) -> Self {
        TheorySpec::TarskiOrd(Box::new(inner))
    }

    pub fn tarski_iter(inner: TheorySpec, n: u32) -> Result<Self, TheoryError> {
        if n == 0 {
            return Err(TheoryError::ZeroIterations);
        }
        Ok(TheorySpec::TarskiIter(Box::new(inner), n))
    }

    /// Replaces every iterate by nested `TarskiOrd` layers.
    pub fn canonical(&self) -> TheorySpec {
        match self {
            TheorySpec::PA => TheorySpec::PA,
            TheorySpec::Tarski(t) => TheorySpec::tarski(t.canonical()),
            TheorySpec::SubsystemS(t, a) => TheorySpec::SubsystemS(Box::new(t.canonical()), a.clone()),
            TheorySpec::TarskiOrd(t) => TheorySpec::tarski_ord(t.canonical()),
            TheorySpec::TarskiIter(t, n) => {
                let mut out = t.canonical();
                for _ in 0..*n {
                    out = TheorySpec::tarski_ord(out);
                }
                out
            }
        }
    }

    /// Number of truth layers, equal to the language's level.
    pub fn level(&self) -> u32 {
        match self {
            TheorySpec::PA => 0,
            TheorySpec::Tarski(t) | TheorySpec::SubsystemS(t, _) | TheorySpec::TarskiOrd(t) => t.level() + 1,
            TheorySpec::TarskiIter(t, n) => t.level() + n,
        }
    }

    pub fn language(&self) -> LanguageId {
        match self {
            TheorySpec::PA => LanguageId::base(),
            TheorySpec::Tarski(t) => t.language().push(Layer::Simple),
            TheorySpec::SubsystemS(t, a) => t.language().push(Layer::UpTo(a.successor())),
            TheorySpec::TarskiOrd(t) => t.language().push(Layer::FullWithAcc),
            TheorySpec::TarskiIter(t, n) => {
                let mut l = t.language();
                for _ in 0..*n {
                    l = l.push(Layer::FullWithAcc);
                }
                l
            }
        }
    }

    /// Code of the canonical form.
    pub fn encode(&self) -> BigUint {
        let mut w = BitWriter::new();
        write_theory(&mut w, &self.canonical());
        w.finish()
    }

    pub fn decode(n: &BigUint) -> Option<TheorySpec> {
        let mut r = BitReader::new(n)?;
        let t = read_theory(&mut r, 0)?;
        r.at_end().then_some(t)
    }
}

pub fn language_of(theory: &TheorySpec) -> LanguageId {
    theory.language()
}

fn write_theory(w: &mut BitWriter, t: &TheorySpec) {
    match t {
        TheorySpec::PA => w.bits(0, 2),
        TheorySpec::Tarski(i) => {
            w.bits(1, 2);
            write_theory(w, i);
        }
        TheorySpec::SubsystemS(i, a) => {
            w.bits(2, 2);
            write_theory(w, i);
            w.natural(a.value());
        }
        TheorySpec::TarskiOrd(i) => {
            w.bits(3, 2);
            write_theory(w, i);
        }
        TheorySpec::TarskiIter(..) => write_theory(w, &t.canonical()),
    }
}

fn read_theory(r: &mut BitReader, depth: usize) -> Option<TheorySpec> {
    if depth > 64 {
        return None;
    }
    Some(match r.bits(2)? {
        0 => TheorySpec::PA,
        1 => TheorySpec::tarski(read_theory(r, depth + 1)?),
        2 => {
            let inner = read_theory(r, depth + 1)?;
            TheorySpec::subsystem(inner, OrdinalCode(r.natural()?)).ok()?
        }
        _ => TheorySpec::tarski_ord(read_theory(r, depth + 1)?),
    })
}

impl fmt::Display for TheorySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheorySpec::PA => f.write_str("PA"),
            TheorySpec::Tarski(t) => write!(f, "tarski({t})"),
            TheorySpec::SubsystemS(t, a) => {
                write!(f, "S[a={}]({t})", crate::syntax::print_index(a))
            }
            TheorySpec::TarskiOrd(t) => write!(f, "tord({t})"),
            TheorySpec::TarskiIter(t, n) => write!(f, "tord^{n}({t})"),
        }
    }
}

impl std::str::FromStr for TheorySpec {
    type Err = TheoryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || TheoryError::Descriptor(s.to_string());
        if s == "PA" {
            return Ok(TheorySpec::PA);
        }
        let inner_of = |rest: &str| -> Result<TheorySpec, TheoryError> {
            let body = rest
                .trim_start()
                .strip_prefix('(')
                .and_then(|r| r.trim_end().strip_suffix(')'))
                .ok_or_else(bad)?;
            body.parse()
        };
        if let Some(rest) = s.strip_prefix("tarski") {
            return Ok(TheorySpec::tarski(inner_of(rest)?));
        }
        if let Some(rest) = s.strip_prefix("tord^") {
            let digits = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let n: u32 = rest[..digits].parse().map_err(|_| bad())?;
            return TheorySpec::tarski_iter(inner_of(&rest[digits..])?, n);
        }
        if let Some(rest) = s.strip_prefix("tord") {
            return Ok(TheorySpec::tarski_ord(inner_of(rest)?));
        }
        if let Some(rest) = s.strip_prefix("S[") {
            let close = matching_bracket(rest).ok_or_else(bad)?;
            let index = rest[..close].trim().strip_prefix("a=").ok_or_else(bad)?;
            let a = crate::syntax::parse_index(index).map_err(|_| bad())?;
            return TheorySpec::subsystem(inner_of(&rest[close + 1..])?, a);
        }
        Err(bad())
    }
}

fn matching_bracket(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ')' => depth -= 1,
            ']' if depth == 0 => return Some(i),
            ']' => depth -= 1,
            _ => {}
        }
    }
    None
}
