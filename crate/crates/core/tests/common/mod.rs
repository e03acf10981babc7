//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigUint;
use ordtruth::ordinal::{gamma, Ordinal, OrdinalCode};
use ordtruth::syntax::{Formula, PrFun, PrRel, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type R = ChaCha8Rng;

pub fn rng(seed: u64) -> R {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random ordinal below Γ₀ whose φ-tree depth is at most `depth`.
pub fn ordinal(r: &mut R, depth: u32) -> Ordinal {
    if depth == 0 || r.gen_bool(0.25) {
        return Ordinal::nat(r.gen_range(0..6));
    }
    let mut acc = Ordinal::Zero;
    for _ in 0..r.gen_range(1..=3) {
        let a = if r.gen_bool(0.5) { Ordinal::Zero } else { ordinal(r, depth - 1) };
        let b = ordinal(r, depth - 1);
        let t = Ordinal::veblen(&a, &b).unwrap().mul(&Ordinal::nat(r.gen_range(1..4))).unwrap();
        acc = acc.add(&t).unwrap();
    }
    acc
}

/// Mix of γ-values, small perturbations of them, and random ordinals.
pub fn ordinal_near_gammas(r: &mut R) -> Ordinal {
    match r.gen_range(0..3) {
        0 => gamma(r.gen_range(0..5)),
        1 => gamma(r.gen_range(1..5)).add(&ordinal(r, 2)).unwrap(),
        _ => ordinal(r, 3),
    }
}

pub fn code(x: &Ordinal) -> OrdinalCode {
    OrdinalCode::encode(x)
}

/// A natural that is a valid ordinal code about half of the time.
pub fn raw_code(r: &mut R) -> OrdinalCode {
    if r.gen_bool(0.5) {
        code(&ordinal(r, 2))
    } else {
        OrdinalCode(BigUint::from(r.gen_range(0u64..5000)))
    }
}

pub fn term(r: &mut R, vars: u32, depth: u32) -> Term {
    if depth == 0 || r.gen_bool(0.35) {
        return if r.gen_bool(0.6) {
            Term::var(r.gen_range(0..vars))
        } else {
            Term::num(r.gen_range(0u32..120))
        };
    }
    match r.gen_range(0..4) {
        0 => Term::succ(term(r, vars, depth - 1)),
        1 => Term::add(term(r, vars, depth - 1), term(r, vars, depth - 1)),
        2 => Term::mul(term(r, vars, depth - 1), term(r, vars, depth - 1)),
        _ => {
            let f = *PrFun::ALL.choose(r).unwrap();
            let args = (0..f.arity()).map(|_| term(r, vars, depth - 1)).collect();
            Term::fun(f, args)
        }
    }
}

/// Which non-arithmetic atoms a generated formula may use.
#[derive(Clone, Copy, Debug)]
pub enum Atoms {
    /// Equations and designated relations only.
    Arithmetic,
    /// Also `T[1](t)`.
    SimpleTruth,
    /// Also `T[1,i](t)` with `i` a valid code, and `Acc[1](t)`.
    IndexedTruth,
    /// Every atom kind at levels 1..=3 with arbitrary indices.
    Any,
}

fn atom(r: &mut R, vars: u32, atoms: Atoms) -> Formula {
    let t = |r: &mut R| term(r, vars, 2);
    let pick = match atoms {
        Atoms::Arithmetic => r.gen_range(0..2),
        Atoms::SimpleTruth => r.gen_range(0..3),
        Atoms::IndexedTruth => [0, 1, 5, 6][r.gen_range(0..4)],
        Atoms::Any => r.gen_range(0..5),
    };
    match pick {
        0 => Formula::eq(t(r), t(r)),
        1 => {
            let rel = *PrRel::ALL.choose(r).unwrap();
            let args = (0..rel.arity()).map(|_| t(r)).collect();
            Formula::rel(rel, args)
        }
        2 => {
            let level = if matches!(atoms, Atoms::Any) { r.gen_range(1..4) } else { 1 };
            Formula::simple_truth(level, t(r))
        }
        3 => Formula::truth(r.gen_range(1..4), raw_code(r), t(r)),
        4 => Formula::acc(r.gen_range(1..4), t(r)),
        5 => Formula::truth(1, code(&ordinal(r, 2)), t(r)),
        _ => Formula::acc(1, t(r)),
    }
}

pub fn formula(r: &mut R, vars: u32, depth: u32, atoms: Atoms) -> Formula {
    if depth == 0 || r.gen_bool(0.25) {
        return atom(r, vars, atoms);
    }
    let sub = |r: &mut R| formula(r, vars, depth - 1, atoms);
    match r.gen_range(0..8) {
        0 => Formula::not(sub(r)),
        1 => Formula::and(sub(r), sub(r)),
        2 => Formula::or(sub(r), sub(r)),
        3 => Formula::implies(sub(r), sub(r)),
        4 => Formula::iff(sub(r), sub(r)),
        5 | 6 => Formula::forall(r.gen_range(0..vars), sub(r)),
        _ => Formula::exists(r.gen_range(0..vars), sub(r)),
    }
}

/// A formula with exactly one free variable.
pub fn predicate(r: &mut R, depth: u32, atoms: Atoms) -> Formula {
    let f = formula(r, 4, depth, atoms);
    let fv: Vec<u32> = f.free_vars().into_iter().collect();
    match fv.split_first() {
        None => {
            let v = r.gen_range(0..4);
            Formula::and(f, Formula::eq(Term::var(v), Term::var(v)))
        }
        Some((_, rest)) => rest.iter().rev().fold(f, |acc, &v| Formula::forall(v, acc)),
    }
}

fn bump_term(r: &mut R, t: &Term) -> Term {
    match t {
        Term::Num(n) => Term::Num(n + 1u32),
        Term::Var(v) => Term::var(v + 1),
        Term::Succ(s) => (**s).clone(),
        Term::Add(a, b) => Term::mul((**a).clone(), (**b).clone()),
        Term::Mul(a, b) => Term::add((**a).clone(), (**b).clone()),
        Term::Fun(f, args) => {
            let mut args = args.clone();
            let i = r.gen_range(0..args.len());
            args[i] = bump_term(r, &args[i]);
            Term::fun(*f, args)
        }
    }
}

fn count(f: &Formula) -> usize {
    let mut n = 0;
    f.visit(&mut |_| n += 1);
    n
}

fn mutate_at(r: &mut R, f: &Formula, target: &mut usize) -> Formula {
    use Formula::*;
    if *target == 0 {
        *target = usize::MAX;
        return mutate_node(r, f);
    }
    *target -= 1;
    let mut go = |g: &Formula| Box::new(mutate_at(r, g, target));
    match f {
        Not(a) => Not(go(a)),
        And(a, b) => {
            let a = go(a);
            And(a, go(b))
        }
        Or(a, b) => {
            let a = go(a);
            Or(a, go(b))
        }
        Implies(a, b) => {
            let a = go(a);
            Implies(a, go(b))
        }
        Iff(a, b) => {
            let a = go(a);
            Iff(a, go(b))
        }
        ForAll(v, a) => ForAll(*v, go(a)),
        Exists(v, a) => Exists(*v, go(a)),
        atom => atom.clone(),
    }
}

fn mutate_node(r: &mut R, f: &Formula) -> Formula {
    use Formula::*;
    match f {
        Eq(a, b) => {
            if r.gen_bool(0.5) {
                Formula::eq(bump_term(r, a), b.clone())
            } else {
                Formula::not(f.clone())
            }
        }
        Truth { level, index, arg } => match r.gen_range(0..3) {
            0 => Formula::truth(level + 1, index.clone(), arg.clone()),
            1 => Formula::truth(*level, OrdinalCode(index.value() + 1u32), arg.clone()),
            _ => Formula::truth(*level, index.clone(), bump_term(r, arg)),
        },
        SimpleTruth { level, arg } => {
            if r.gen_bool(0.5) {
                Formula::simple_truth(level + 1, arg.clone())
            } else {
                Formula::simple_truth(*level, bump_term(r, arg))
            }
        }
        Acc { level, arg } => {
            if r.gen_bool(0.5) {
                Formula::acc(level + 1, arg.clone())
            } else {
                Formula::acc(*level, bump_term(r, arg))
            }
        }
        Rel(rel, args) => {
            let mut args = args.clone();
            let i = r.gen_range(0..args.len());
            args[i] = bump_term(r, &args[i]);
            Formula::rel(*rel, args)
        }
        Not(a) => (**a).clone(),
        And(a, b) => Formula::or((**a).clone(), (**b).clone()),
        Or(a, b) => Formula::and((**a).clone(), (**b).clone()),
        Implies(a, b) => {
            if r.gen_bool(0.5) {
                Formula::iff((**a).clone(), (**b).clone())
            } else {
                Formula::implies((**b).clone(), (**a).clone())
            }
        }
        Iff(a, b) => Formula::implies((**a).clone(), (**b).clone()),
        ForAll(v, a) => {
            if r.gen_bool(0.5) {
                Formula::exists(*v, (**a).clone())
            } else {
                Formula::forall(v + 1, (**a).clone())
            }
        }
        Exists(v, a) => Formula::forall(*v, (**a).clone()),
    }
}

/// A structured single-site mutation: operator flips, index bumps, negation
/// toggles and argument perturbations.
pub fn mutate(r: &mut R, f: &Formula) -> Formula {
    let mut target = r.gen_range(0..count(f));
    mutate_at(r, f, &mut target)
}
