//! Generated proofs of `Prog(A) → A(n̂)` and `Prog(A) → J_A(0̂)`.

use super::build::{axiom, chain, comp, compile, discharge, ex_falso, gen, hyp, iff_lr, iff_rl, inst, mp, or_elim, rewrite, sym, D};
use super::Proof;
use crate::ordinal::Ordinal;
use crate::syntax::{Formula, PrFun, Term};
use crate::theories::{mk_jump, mk_prog, TheorySpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TemplateError {
    #[error("formula does not have exactly one free variable")]
    NotAPredicate,
    #[error("predicate is outside the language {0}")]
    LanguageMismatch(String),
}

fn code(n: u64) -> Term {
    Term::Num(crate::ordinal::OrdinalCode::encode(&Ordinal::nat(n)).0)
}

fn prepare(a: &Formula, theory: &TheorySpec) -> Result<D, TemplateError> {
    if !a.is_predicate() {
        return Err(TemplateError::NotAPredicate);
    }
    let lang = theory.language();
    if !lang.contains(a) {
        return Err(TemplateError::LanguageMismatch(lang.to_string()));
    }
    let prog = mk_prog(a).map_err(|_| TemplateError::NotAPredicate)?;
    Ok(hyp(prog))
}

fn split_iff(d: &D) -> (Formula, Formula) {
    match d.concl() {
        Formula::Iff(l, r) => ((**l).clone(), (**r).clone()),
        f => unreachable!("progressivity instance is a biconditional: {f}"),
    }
}

fn bounded_body(l: &Formula) -> (u32, Formula, Formula) {
    match l {
        Formula::ForAll(y, body) => match &**body {
            Formula::Implies(guard, ay) => (*y, (**guard).clone(), (**ay).clone()),
            f => unreachable!("bounded quantifier body: {f}"),
        },
        f => unreachable!("bounded quantifier: {f}"),
    }
}

/// `y = c → A(y)` from a derivation of `A(c)`.
fn equal_case(y: u32, c: &Term, a_c: &D, a_y: &Formula) -> D {
    let e = Formula::eq(Term::var(y), c.clone());
    let body = rewrite(sym(hyp(e.clone())), a_c.clone(), a_y.clone());
    discharge(&e, &body)
}

/// From `A(p)` under `h = Prog(A)`, derives `A(s)` where the successor axiom
/// instance `prec(y, s) ↔ (prec(y, p) ∨ y = p)` is supplied by `split`.
fn step(h: &D, p: &Term, a_p: &D, s: &Term, split: impl FnOnce(u32) -> D) -> D {
    let below_p = mp(a_p.clone(), iff_rl(inst(h.clone(), p)));
    let at_s = inst(h.clone(), s);
    let (l, _) = split_iff(&at_s);
    let (y, _, a_y) = bounded_body(&l);
    let lt = inst(below_p, &Term::var(y));
    let eq = equal_case(y, p, a_p, &a_y);
    let body = chain(iff_lr(split(y)), or_elim(lt, eq));
    mp(gen(body, y), iff_lr(at_s))
}

fn successor_axiom() -> D {
    let one = code(1);
    let (x0, x1) = (Term::var(0), Term::var(1));
    axiom(Formula::forall(
        0,
        Formula::forall(
            1,
            Formula::iff(
                Formula::prec(x1.clone(), Term::fun(PrFun::OAdd, vec![x0.clone(), one])),
                Formula::or(Formula::prec(x1.clone(), x0.clone()), Formula::eq(x1, x0)),
            ),
        ),
    ))
}

/// A proof of `Prog(A) → A(n̂)`, with `n̂` the numeral for the code of the
/// ordinal `n`, whose length grows linearly in `n`.
pub fn template_prog_numeral(a: &Formula, n: u64, theory: &TheorySpec) -> Result<Proof, TemplateError> {
    let h = prepare(a, theory)?;
    // position zero: the bounded quantifier is vacuous
    let zero = code(0);
    let at0 = inst(h.clone(), &zero);
    let (l0, _) = split_iff(&at0);
    let (y, guard, a_y) = bounded_body(&l0);
    let least = axiom(Formula::forall(0, Formula::not(Formula::prec(Term::var(0), zero.clone()))));
    let not_below = inst(least, &Term::var(y));
    debug_assert_eq!(not_below.concl(), &Formula::not(guard));
    let mut acc = mp(gen(ex_falso(not_below, a_y), y), iff_lr(at0));

    for m in 1..=n {
        let (p, s) = (code(m - 1), code(m));
        let split = |y: u32| {
            let raw = inst(inst(successor_axiom(), &p), &Term::var(y));
            let sum = Term::fun(PrFun::OAdd, vec![p.clone(), code(1)]);
            let Formula::Iff(_, rhs) = raw.concl().clone() else { unreachable!() };
            let target = Formula::iff(Formula::prec(Term::var(y), s.clone()), *rhs);
            rewrite(comp(Formula::eq(sum, s.clone())), raw, target)
        };
        acc = step(&h, &p, &acc, &s, split);
    }
    Ok(compile(&discharge(h.concl(), &acc)))
}

/// A proof of `Prog(A) → J_A(0̂)`: progressivity gives `A(x) → A(x + 1)`,
/// and `ω^0 = 1` is a computation.
pub fn template_jump_base(a: &Formula, theory: &TheorySpec) -> Result<Proof, TemplateError> {
    let h = prepare(a, theory)?;
    let jump = mk_jump(a).map_err(|_| TemplateError::NotAPredicate)?;
    let target = jump.apply(&code(0)).ok_or(TemplateError::NotAPredicate)?;
    let Formula::ForAll(x, body) = &target else { unreachable!() };
    let Formula::Implies(a_x, a_shift) = &**body else { unreachable!() };
    let (x, a_x, a_shift) = (*x, (**a_x).clone(), (**a_shift).clone());

    let xv = Term::var(x);
    let one = code(1);
    let s = Term::fun(PrFun::OAdd, vec![xv.clone(), one.clone()]);
    let assumed = hyp(a_x.clone());
    let split = |y: u32| inst(inst(successor_axiom(), &xv), &Term::var(y));
    let a_s = step(&h, &xv, &assumed, &s, split);
    let omega_zero = Term::fun(PrFun::OExp, vec![code_of(&Ordinal::omega()), code(0)]);
    let shifted = rewrite(comp(Formula::eq(one, omega_zero)), a_s, a_shift);
    let body = gen(discharge(&a_x, &shifted), x);
    Ok(compile(&discharge(h.concl(), &body)))
}

fn code_of(x: &Ordinal) -> Term {
    Term::Num(crate::ordinal::OrdinalCode::encode(x).0)
}

/// `ω^(1) = ω`, `ω^(n+1) = ω^(ω^(n))`. Requires `n ≥ 1`.
pub fn omega_tower(n: u64) -> Ordinal {
    assert!(n >= 1, "the tower starts at height one");
    let w = Ordinal::omega();
    let mut t = w.clone();
    for _ in 1..n {
        t = w.exp(&t).expect("towers stay below epsilon_0");
    }
    t
}
