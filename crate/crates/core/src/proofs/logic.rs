//! The logical axiom schemes of the classical Hilbert calculus with equality.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::syntax::{Formula, Term};

/// One schematic logical axiom. Instances are recognized by shape alone, so a
/// proof line only names the scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LogicScheme {
    /// `P → (Q → P)`
    A1,
    /// `(P → (Q → R)) → ((P → Q) → (P → R))`
    A2,
    /// `(¬Q → ¬P) → (P → Q)`
    A3,
    /// `P ∧ Q → P`
    And1,
    /// `P ∧ Q → Q`
    And2,
    /// `P → (Q → P ∧ Q)`
    And3,
    /// `P → P ∨ Q`
    Or1,
    /// `Q → P ∨ Q`
    Or2,
    /// `(P → R) → ((Q → R) → (P ∨ Q → R))`
    Or3,
    /// `(P ↔ Q) → (P → Q)`
    Iff1,
    /// `(P ↔ Q) → (Q → P)`
    Iff2,
    /// `(P → Q) → ((Q → P) → (P ↔ Q))`
    Iff3,
    /// `∀x P → P[t/x]`
    Q1,
    /// `∀x (P → Q) → (P → ∀x Q)` with `x` not free in `P`
    Q2,
    /// `P[t/x] → ∃x P`
    Ex1,
    /// `∀x (P → Q) → (∃x P → Q)` with `x` not free in `Q`
    Ex2,
    /// `t = t`
    Eq1,
    /// `s = t → (P → P')` where `P'` replaces some free occurrences of `s` in `P` by `t`
    Eq2,
}

impl LogicScheme {
    pub const ALL: [LogicScheme; 18] = [
        LogicScheme::A1,
        LogicScheme::A2,
        LogicScheme::A3,
        LogicScheme::And1,
        LogicScheme::And2,
        LogicScheme::And3,
        LogicScheme::Or1,
        LogicScheme::Or2,
        LogicScheme::Or3,
        LogicScheme::Iff1,
        LogicScheme::Iff2,
        LogicScheme::Iff3,
        LogicScheme::Q1,
        LogicScheme::Q2,
        LogicScheme::Ex1,
        LogicScheme::Ex2,
        LogicScheme::Eq1,
        LogicScheme::Eq2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LogicScheme::A1 => "A1",
            LogicScheme::A2 => "A2",
            LogicScheme::A3 => "A3",
            LogicScheme::And1 => "AND1",
            LogicScheme::And2 => "AND2",
            LogicScheme::And3 => "AND3",
            LogicScheme::Or1 => "OR1",
            LogicScheme::Or2 => "OR2",
            LogicScheme::Or3 => "OR3",
            LogicScheme::Iff1 => "IFF1",
            LogicScheme::Iff2 => "IFF2",
            LogicScheme::Iff3 => "IFF3",
            LogicScheme::Q1 => "Q1",
            LogicScheme::Q2 => "Q2",
            LogicScheme::Ex1 => "EX1",
            LogicScheme::Ex2 => "EX2",
            LogicScheme::Eq1 => "EQ1",
            LogicScheme::Eq2 => "EQ2",
        }
    }

    pub(crate) fn id(self) -> u64 {
        LogicScheme::ALL.iter().position(|&s| s == self).unwrap() as u64
    }

    pub(crate) fn from_id(id: u64) -> Option<LogicScheme> {
        LogicScheme::ALL.get(usize::try_from(id).ok()?).copied()
    }

    /// Whether `f` is an instance of this scheme.
    pub fn matches(self, f: &Formula) -> bool {
        use Formula::{And, Eq, Exists, ForAll, Iff, Implies, Not, Or};
        if self == LogicScheme::Eq1 {
            return matches!(f, Eq(s, t) if s == t);
        }
        let Implies(l, r) = f else {
            return false;
        };
        match self {
            LogicScheme::A1 => matches!(&**r, Implies(_, p) if p.alpha_eq(l)),
            LogicScheme::A2 => match (&**l, &**r) {
                (Implies(p, qr), Implies(pq, pr)) => match (&**qr, &**pq, &**pr) {
                    (Implies(q, r1), Implies(p2, q2), Implies(p3, r2)) => {
                        p.alpha_eq(p2) && p.alpha_eq(p3) && q.alpha_eq(q2) && r1.alpha_eq(r2)
                    }
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::A3 => match (&**l, &**r) {
                (Implies(nq, np), Implies(p, q)) => match (&**nq, &**np) {
                    (Not(q2), Not(p2)) => p.alpha_eq(p2) && q.alpha_eq(q2),
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::And1 => matches!(&**l, And(p, _) if p.alpha_eq(r)),
            LogicScheme::And2 => matches!(&**l, And(_, q) if q.alpha_eq(r)),
            LogicScheme::And3 => match &**r {
                Implies(q, pq) => matches!(&**pq, And(p2, q2) if p2.alpha_eq(l) && q2.alpha_eq(q)),
                _ => false,
            },
            LogicScheme::Or1 => matches!(&**r, Or(p, _) if p.alpha_eq(l)),
            LogicScheme::Or2 => matches!(&**r, Or(_, q) if q.alpha_eq(l)),
            LogicScheme::Or3 => match (&**l, &**r) {
                (Implies(p, r1), Implies(qr, rest)) => match (&**qr, &**rest) {
                    (Implies(q, r2), Implies(pq, r3)) => {
                        r1.alpha_eq(r2)
                            && r1.alpha_eq(r3)
                            && matches!(&**pq, Or(p2, q2) if p2.alpha_eq(p) && q2.alpha_eq(q))
                    }
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::Iff1 => match (&**l, &**r) {
                (Iff(p, q), Implies(p2, q2)) => p.alpha_eq(p2) && q.alpha_eq(q2),
                _ => false,
            },
            LogicScheme::Iff2 => match (&**l, &**r) {
                (Iff(p, q), Implies(q2, p2)) => p.alpha_eq(p2) && q.alpha_eq(q2),
                _ => false,
            },
            LogicScheme::Iff3 => match (&**l, &**r) {
                (Implies(p, q), Implies(qp, iff)) => match (&**qp, &**iff) {
                    (Implies(q2, p2), Iff(p3, q3)) => {
                        p.alpha_eq(p2) && p.alpha_eq(p3) && q.alpha_eq(q2) && q.alpha_eq(q3)
                    }
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::Q1 => matches!(&**l, ForAll(x, p) if is_instance(p, *x, r)),
            LogicScheme::Ex1 => matches!(&**r, Exists(x, p) if is_instance(p, *x, l)),
            LogicScheme::Q2 => match (&**l, &**r) {
                (ForAll(x, pq), Implies(p2, fq)) => match (&**pq, &**fq) {
                    (Implies(p, q), ForAll(x2, q2)) => {
                        x == x2 && !p.has_free(*x) && p.alpha_eq(p2) && q.alpha_eq(q2)
                    }
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::Ex2 => match (&**l, &**r) {
                (ForAll(x, pq), Implies(ep, q2)) => match (&**pq, &**ep) {
                    (Implies(p, q), Exists(x2, p2)) => {
                        x == x2 && !q.has_free(*x) && p.alpha_eq(p2) && q.alpha_eq(q2)
                    }
                    _ => false,
                },
                _ => false,
            },
            LogicScheme::Eq2 => match (&**l, &**r) {
                (Eq(s, t), Implies(p, p2)) => replaces(p, p2, s, t),
                _ => false,
            },
            LogicScheme::Eq1 => unreachable!(),
        }
    }
}

impl fmt::Display for LogicScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LogicScheme {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        LogicScheme::ALL.into_iter().find(|x| x.name() == s).ok_or(())
    }
}

/// Whether `q` is `p[t/x]` for some term `t`. The candidate `t` is read off the
/// first free occurrence of `x` and then confirmed by substituting.
fn is_instance(p: &Formula, x: u32, q: &Formula) -> bool {
    match find_witness(p, x, q) {
        Some(t) => p.subst(x, &t).alpha_eq(q),
        None => p.alpha_eq(q),
    }
}

fn find_witness(p: &Formula, x: u32, q: &Formula) -> Option<Term> {
    use Formula::*;
    match (p, q) {
        (Eq(a, b), Eq(c, d)) => term_witness(a, x, c).or_else(|| term_witness(b, x, d)),
        (Truth { arg: a, .. }, Truth { arg: b, .. })
        | (SimpleTruth { arg: a, .. }, SimpleTruth { arg: b, .. })
        | (Acc { arg: a, .. }, Acc { arg: b, .. }) => term_witness(a, x, b),
        (Rel(_, xs), Rel(_, ys)) => xs.iter().zip(ys).find_map(|(a, b)| term_witness(a, x, b)),
        (Not(a), Not(b)) => find_witness(a, x, b),
        (And(a1, a2), And(b1, b2))
        | (Or(a1, a2), Or(b1, b2))
        | (Implies(a1, a2), Implies(b1, b2))
        | (Iff(a1, a2), Iff(b1, b2)) => find_witness(a1, x, b1).or_else(|| find_witness(a2, x, b2)),
        (ForAll(y, a), ForAll(_, b)) | (Exists(y, a), Exists(_, b)) if *y != x => find_witness(a, x, b),
        _ => None,
    }
}

fn term_witness(a: &Term, x: u32, b: &Term) -> Option<Term> {
    match (a, b) {
        (Term::Var(y), _) if *y == x => Some(b.clone()),
        (Term::Succ(s), Term::Succ(t)) => term_witness(s, x, t),
        (Term::Succ(s), Term::Num(k)) if *k > BigUint::ZERO => term_witness(s, x, &Term::Num(k - 1u32)),
        (Term::Add(a1, a2), Term::Add(b1, b2)) | (Term::Mul(a1, a2), Term::Mul(b1, b2)) => {
            term_witness(a1, x, b1).or_else(|| term_witness(a2, x, b2))
        }
        (Term::Fun(_, xs), Term::Fun(_, ys)) => xs.iter().zip(ys).find_map(|(a, b)| term_witness(a, x, b)),
        _ => None,
    }
}

/// `p2` agrees with `p` except that some occurrences of `s` became `t`, none of
/// them under a binder for a variable of `s` or `t`.
fn replaces(p: &Formula, p2: &Formula, s: &Term, t: &Term) -> bool {
    let mut st_vars = s.vars();
    t.vars_into(&mut st_vars);
    rep_formula(p, p2, s, t, &st_vars, &mut Vec::new())
}

fn rep_formula(a: &Formula, b: &Formula, s: &Term, t: &Term, st: &BTreeSet<u32>, bound: &mut Vec<u32>) -> bool {
    use Formula::*;
    let rt = |x: &Term, y: &Term, bound: &Vec<u32>| rep_term(x, y, s, t, st, bound);
    match (a, b) {
        (Eq(a1, a2), Eq(b1, b2)) => rt(a1, b1, bound) && rt(a2, b2, bound),
        (Truth { level: l1, index: i1, arg: a }, Truth { level: l2, index: i2, arg: b }) => {
            l1 == l2 && i1 == i2 && rt(a, b, bound)
        }
        (SimpleTruth { level: l1, arg: a }, SimpleTruth { level: l2, arg: b })
        | (Acc { level: l1, arg: a }, Acc { level: l2, arg: b }) => l1 == l2 && rt(a, b, bound),
        (Rel(r1, xs), Rel(r2, ys)) => r1 == r2 && xs.iter().zip(ys).all(|(x, y)| rt(x, y, bound)),
        (Not(x), Not(y)) => rep_formula(x, y, s, t, st, bound),
        (And(a1, a2), And(b1, b2))
        | (Or(a1, a2), Or(b1, b2))
        | (Implies(a1, a2), Implies(b1, b2))
        | (Iff(a1, a2), Iff(b1, b2)) => rep_formula(a1, b1, s, t, st, bound) && rep_formula(a2, b2, s, t, st, bound),
        (ForAll(x, a), ForAll(y, b)) | (Exists(x, a), Exists(y, b)) if x == y => {
            bound.push(*x);
            let ok = rep_formula(a, b, s, t, st, bound);
            bound.pop();
            ok
        }
        _ => false,
    }
}

fn rep_term(a: &Term, b: &Term, s: &Term, t: &Term, st: &BTreeSet<u32>, bound: &[u32]) -> bool {
    if a == b {
        return true;
    }
    if a == s && b == t {
        return !bound.iter().any(|v| st.contains(v));
    }
    match (a, b) {
        (Term::Succ(x), Term::Succ(y)) => rep_term(x, y, s, t, st, bound),
        // numerals are folded successor chains
        (Term::Num(k), Term::Succ(y)) if *k > BigUint::ZERO => rep_term(&Term::Num(k - 1u32), y, s, t, st, bound),
        (Term::Succ(x), Term::Num(k)) if *k > BigUint::ZERO => rep_term(x, &Term::Num(k - 1u32), s, t, st, bound),
        (Term::Add(a1, a2), Term::Add(b1, b2)) | (Term::Mul(a1, a2), Term::Mul(b1, b2)) => {
            rep_term(a1, b1, s, t, st, bound) && rep_term(a2, b2, s, t, st, bound)
        }
        (Term::Fun(f, xs), Term::Fun(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| rep_term(x, y, s, t, st, bound))
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn propositional_instances() {
        assert!(LogicScheme::A1.matches(&f("0 = 0 -> (x1 = x2 -> 0 = 0)")));
        assert!(!LogicScheme::A1.matches(&f("0 = 0 -> (x1 = x2 -> x1 = x2)")));
        assert!(LogicScheme::A3.matches(&f("(~x1 = 0 -> ~x2 = 0) -> (x2 = 0 -> x1 = 0)")));
        assert!(LogicScheme::Or3.matches(&f("(x0 = 0 -> x2 = 0) -> ((x1 = 0 -> x2 = 0) -> (x0 = 0 | x1 = 0 -> x2 = 0))")));
        assert!(LogicScheme::Iff2.matches(&f("(x0 = 0 <-> x1 = 0) -> (x1 = 0 -> x0 = 0)")));
    }

    #[test]
    fn quantifier_instances() {
        assert!(LogicScheme::Q1.matches(&f("(forall x0. x0 + 0 = x0) -> S(x3) + 0 = S(x3)")));
        assert!(!LogicScheme::Q1.matches(&f("(forall x0. x0 + 0 = x0) -> x3 + 0 = x4")));
        // capture: instantiating with x1 must rename the inner binder
        assert!(!LogicScheme::Q1.matches(&f("(forall x0. forall x1. x0 = x1) -> forall x1. x1 = x1")));
        assert!(LogicScheme::Q1.matches(&f("(forall x0. forall x1. x0 = x1) -> forall x2. x1 = x2")));
        assert!(LogicScheme::Q2.matches(&f("(forall x1. (0 = 0 -> x1 = x1)) -> (0 = 0 -> forall x1. x1 = x1)")));
        assert!(!LogicScheme::Q2.matches(&f("(forall x1. (x1 = 0 -> x1 = x1)) -> (x1 = 0 -> forall x1. x1 = x1)")));
        assert!(LogicScheme::Ex1.matches(&f("0 = 0 -> exists x0. x0 = 0")));
    }

    #[test]
    fn equality_instances() {
        assert!(LogicScheme::Eq1.matches(&f("S(x1) = S(x1)")));
        assert!(LogicScheme::Eq2.matches(&f("x0 = x1 -> (x0 = x0 -> x1 = x0)")));
        assert!(!LogicScheme::Eq2.matches(&f("x0 = x1 -> (x0 = x0 -> x1 = x2)")));
        assert!(!LogicScheme::Eq2.matches(&f("x0 = x1 -> ((forall x1. x0 = 0) -> forall x1. x1 = 0)")));
        // S(2) folds to 3, so replacing 2 by x1 inside it yields S(x1)
        assert!(LogicScheme::Eq2.matches(&f("2 = x1 -> (T[1](3) -> T[1](S(x1)))")));
        assert!(LogicScheme::Q1.matches(&f("(forall x0. x0 = S(x0)) -> 2 = 3")));
    }

    #[test]
    fn ids_round_trip() {
        for s in LogicScheme::ALL {
            assert_eq!(LogicScheme::from_id(s.id()), Some(s));
            assert_eq!(s.name().parse(), Ok(s));
        }
    }
}
