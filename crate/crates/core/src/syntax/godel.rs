//! Gödel numbering of terms and formulas.
//!
//! Formulas start with a 4-bit tag and terms with a 3-bit tag; naturals are
//! written as gamma codes of `n + 1`. Truth indices are stored as raw
//! naturals, so any natural (valid ordinal code or not) may index `T`.

use num_bigint::BigUint;

use super::formula::{Formula, PrRel};
use super::term::{PrFun, Term};
use super::SyntaxError;
use crate::bits::{BitReader, BitWriter};
use crate::ordinal::OrdinalCode;

const MAX_DEPTH: usize = 4096;

pub fn godel_encode(f: &Formula) -> BigUint {
    let mut w = BitWriter::new();
    write_formula(&mut w, f);
    w.finish()
}

pub fn godel_decode(n: &BigUint) -> Option<Formula> {
    let mut r = BitReader::new(n)?;
    let f = read_formula(&mut r, 0)?;
    r.at_end().then_some(f)
}

pub fn term_encode(t: &Term) -> BigUint {
    let mut w = BitWriter::new();
    write_term(&mut w, t);
    w.finish()
}

pub fn term_decode(n: &BigUint) -> Option<Term> {
    let mut r = BitReader::new(n)?;
    let t = read_term(&mut r, 0)?;
    r.at_end().then_some(t)
}

/// The function `g`: substitutes the numeral `n̂` for the free variable of
/// the predicate coded by `code`.
pub fn subst_numeral(code: &BigUint, n: &BigUint) -> Result<BigUint, SyntaxError> {
    let f = godel_decode(code).ok_or(SyntaxError::InvalidCode)?;
    let v = f.predicate_var().ok_or(SyntaxError::NotAPredicate)?;
    Ok(godel_encode(&f.subst(v, &Term::Num(n.clone()))))
}

/// `⌜A ∧ B⌝` from `⌜A⌝` and `⌜B⌝`.
pub fn conj_code(a: &BigUint, b: &BigUint) -> Result<BigUint, SyntaxError> {
    let fa = godel_decode(a).ok_or(SyntaxError::InvalidCode)?;
    let fb = godel_decode(b).ok_or(SyntaxError::InvalidCode)?;
    Ok(godel_encode(&Formula::and(fa, fb)))
}

pub(crate) fn write_term(w: &mut BitWriter, t: &Term) {
    match t {
        Term::Var(i) => {
            w.bits(0, 3);
            w.natural_u64(*i as u64);
        }
        Term::Num(n) => {
            w.bits(1, 3);
            w.natural(n);
        }
        Term::Succ(s) => {
            w.bits(2, 3);
            write_term(w, s);
        }
        Term::Add(a, b) => {
            w.bits(3, 3);
            write_term(w, a);
            write_term(w, b);
        }
        Term::Mul(a, b) => {
            w.bits(4, 3);
            write_term(w, a);
            write_term(w, b);
        }
        Term::Fun(f, args) => {
            w.bits(5, 3);
            w.bits(f.id(), 4);
            for a in args {
                write_term(w, a);
            }
        }
    }
}

pub(crate) fn read_term(r: &mut BitReader, depth: usize) -> Option<Term> {
    if depth > MAX_DEPTH {
        return None;
    }
    let d = depth + 1;
    Some(match r.bits(3)? {
        0 => Term::Var(r.natural_u32()?),
        1 => Term::Num(r.natural()?),
        2 => match read_term(r, d)? {
            // a successor of a numeral is itself a numeral with its own code
            Term::Num(_) => return None,
            s => Term::Succ(Box::new(s)),
        },
        3 => Term::add(read_term(r, d)?, read_term(r, d)?),
        4 => Term::mul(read_term(r, d)?, read_term(r, d)?),
        5 => {
            let f = PrFun::from_id(r.bits(4)?)?;
            let mut args = Vec::with_capacity(f.arity());
            for _ in 0..f.arity() {
                args.push(read_term(r, d)?);
            }
            Term::Fun(f, args)
        }
        _ => return None,
    })
}

pub(crate) fn write_formula(w: &mut BitWriter, f: &Formula) {
    match f {
        Formula::Eq(a, b) => {
            w.bits(0, 4);
            write_term(w, a);
            write_term(w, b);
        }
        Formula::Not(a) => {
            w.bits(1, 4);
            write_formula(w, a);
        }
        Formula::Implies(a, b) => binary(w, 2, a, b),
        Formula::And(a, b) => binary(w, 3, a, b),
        Formula::Or(a, b) => binary(w, 4, a, b),
        Formula::Iff(a, b) => binary(w, 5, a, b),
        Formula::ForAll(v, a) => {
            w.bits(6, 4);
            w.natural_u64(*v as u64);
            write_formula(w, a);
        }
        Formula::Exists(v, a) => {
            w.bits(7, 4);
            w.natural_u64(*v as u64);
            write_formula(w, a);
        }
        Formula::Rel(rel, args) => {
            w.bits(8, 4);
            w.bits(rel.id(), 3);
            for a in args {
                write_term(w, a);
            }
        }
        Formula::Truth { level, index, arg } => {
            w.bits(9, 4);
            w.natural_u64(*level as u64);
            w.natural(index.value());
            write_term(w, arg);
        }
        Formula::SimpleTruth { level, arg } => {
            w.bits(10, 4);
            w.natural_u64(*level as u64);
            write_term(w, arg);
        }
        Formula::Acc { level, arg } => {
            w.bits(11, 4);
            w.natural_u64(*level as u64);
            write_term(w, arg);
        }
    }
}

fn binary(w: &mut BitWriter, tag: u64, a: &Formula, b: &Formula) {
    w.bits(tag, 4);
    write_formula(w, a);
    write_formula(w, b);
}

fn read_level(r: &mut BitReader) -> Option<u32> {
    let k = r.natural_u32()?;
    (k >= 1).then_some(k)
}

pub(crate) fn read_formula(r: &mut BitReader, depth: usize) -> Option<Formula> {
    if depth > MAX_DEPTH {
        return None;
    }
    let d = depth + 1;
    Some(match r.bits(4)? {
        0 => Formula::Eq(read_term(r, d)?, read_term(r, d)?),
        1 => Formula::not(read_formula(r, d)?),
        2 => Formula::implies(read_formula(r, d)?, read_formula(r, d)?),
        3 => Formula::and(read_formula(r, d)?, read_formula(r, d)?),
        4 => Formula::or(read_formula(r, d)?, read_formula(r, d)?),
        5 => Formula::iff(read_formula(r, d)?, read_formula(r, d)?),
        6 => {
            let v = r.natural_u32()?;
            Formula::forall(v, read_formula(r, d)?)
        }
        7 => {
            let v = r.natural_u32()?;
            Formula::exists(v, read_formula(r, d)?)
        }
        8 => {
            let rel = PrRel::from_id(r.bits(3)?)?;
            let mut args = Vec::with_capacity(rel.arity());
            for _ in 0..rel.arity() {
                args.push(read_term(r, d)?);
            }
            Formula::Rel(rel, args)
        }
        9 => {
            let level = read_level(r)?;
            let index = OrdinalCode(r.natural()?);
            Formula::Truth {
                level,
                index,
                arg: read_term(r, d)?,
            }
        }
        10 => {
            let level = read_level(r)?;
            Formula::SimpleTruth {
                level,
                arg: read_term(r, d)?,
            }
        }
        11 => {
            let level = read_level(r)?;
            Formula::Acc {
                level,
                arg: read_term(r, d)?,
            }
        }
        _ => return None,
    })
}
