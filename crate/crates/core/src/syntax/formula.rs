use std::collections::BTreeSet;

use super::term::Term;
use crate::ordinal::OrdinalCode;

/// Designated primitive-recursive relation symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrRel {
    /// Strict `⪯` on codes.
    Prec,
    /// `isFormL(ℓ, x)`: `x` codes a formula of language `ℓ`.
    IsFormL,
    /// `isPredL(ℓ, x)`: `x` codes a formula of `ℓ` with exactly one free variable.
    IsPredL,
    /// `isIndL(ℓ, x)`: `x` codes an induction instance for a formula of `ℓ`.
    IsIndL,
    /// `dedL(ℓ, x, y, z)`: `z` follows from `x` and `y` by modus ponens, all in `ℓ`.
    DedL,
    /// `genL(ℓ, x, z)`: `z` is a generalization of `x`, both in `ℓ`.
    GenL,
    /// `proofOf(θ, p, x)`: `p` codes a valid proof in theory `θ` ending in `x`.
    ProofOf,
}

impl PrRel {
    pub const ALL: [PrRel; 7] = [
        PrRel::Prec,
        PrRel::IsFormL,
        PrRel::IsPredL,
        PrRel::IsIndL,
        PrRel::DedL,
        PrRel::GenL,
        PrRel::ProofOf,
    ];

    pub fn arity(self) -> usize {
        match self {
            PrRel::DedL => 4,
            PrRel::GenL | PrRel::ProofOf => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PrRel::Prec => "prec",
            PrRel::IsFormL => "isFormL",
            PrRel::IsPredL => "isPredL",
            PrRel::IsIndL => "isIndL",
            PrRel::DedL => "dedL",
            PrRel::GenL => "genL",
            PrRel::ProofOf => "proofOf",
        }
    }

    pub fn from_name(s: &str) -> Option<PrRel> {
        PrRel::ALL.into_iter().find(|r| r.name() == s)
    }

    pub(crate) fn id(self) -> u64 {
        PrRel::ALL.iter().position(|&r| r == self).unwrap() as u64
    }

    pub(crate) fn from_id(id: u64) -> Option<PrRel> {
        PrRel::ALL.get(id as usize).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    /// `T_{index}` at hierarchy level `level`.
    Truth {
        level: u32,
        index: OrdinalCode,
        arg: Term,
    },
    /// The single unindexed truth predicate at level `level`.
    SimpleTruth { level: u32, arg: Term },
    Acc { level: u32, arg: Term },
    Rel(PrRel, Vec<Term>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    ForAll(u32, Box<Formula>),
    Exists(u32, Box<Formula>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn truth(level: u32, index: OrdinalCode, arg: Term) -> Formula {
        Formula::Truth { level, index, arg }
    }

    pub fn simple_truth(level: u32, arg: Term) -> Formula {
        Formula::SimpleTruth { level, arg }
    }

    pub fn acc(level: u32, arg: Term) -> Formula {
        Formula::Acc { level, arg }
    }

    /// Panics on an arity mismatch.
    pub fn rel(r: PrRel, args: Vec<Term>) -> Formula {
        assert_eq!(args.len(), r.arity(), "arity of {}", r.name());
        Formula::Rel(r, args)
    }

    pub fn prec(a: Term, b: Term) -> Formula {
        Formula::Rel(PrRel::Prec, vec![a, b])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn forall(v: u32, a: Formula) -> Formula {
        Formula::ForAll(v, Box::new(a))
    }

    pub fn exists(v: u32, a: Formula) -> Formula {
        Formula::Exists(v, Box::new(a))
    }

    /// Terms sitting directly in an atomic formula.
    pub fn atom_terms(&self) -> Vec<&Term> {
        match self {
            Formula::Eq(a, b) => vec![a, b],
            Formula::Truth { arg, .. } | Formula::SimpleTruth { arg, .. } | Formula::Acc { arg, .. } => {
                vec![arg]
            }
            Formula::Rel(_, args) => args.iter().collect(),
            _ => Vec::new(),
        }
    }

    pub fn is_atomic(&self) -> bool {
        matches!(
            self,
            Formula::Eq(..)
                | Formula::Truth { .. }
                | Formula::SimpleTruth { .. }
                | Formula::Acc { .. }
                | Formula::Rel(..)
        )
    }

    fn free_into(&self, bound: &mut Vec<u32>, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Not(a) => a.free_into(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.free_into(bound, out);
                b.free_into(bound, out);
            }
            Formula::ForAll(v, a) | Formula::Exists(v, a) => {
                bound.push(*v);
                a.free_into(bound, out);
                bound.pop();
            }
            atom => {
                for t in atom.atom_terms() {
                    let mut vs = BTreeSet::new();
                    t.vars_into(&mut vs);
                    out.extend(vs.into_iter().filter(|v| !bound.contains(v)));
                }
            }
        }
    }

    pub fn free_vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.free_into(&mut Vec::new(), &mut out);
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn has_free(&self, v: u32) -> bool {
        self.free_vars().contains(&v)
    }

    /// Every variable index occurring anywhere, bound or free.
    pub fn all_vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.visit(&mut |f| match f {
            Formula::ForAll(v, _) | Formula::Exists(v, _) => {
                out.insert(*v);
            }
            atom if atom.is_atomic() => {
                for t in atom.atom_terms() {
                    t.vars_into(&mut out);
                }
            }
            _ => {}
        });
        out
    }

    /// Smallest variable index not occurring anywhere in the formula.
    pub fn fresh_var(&self) -> u32 {
        self.all_vars().last().map_or(0, |v| v + 1)
    }

    /// Pre-order traversal of all subformulas.
    pub fn visit(&self, f: &mut impl FnMut(&Formula)) {
        f(self);
        match self {
            Formula::Not(a) | Formula::ForAll(_, a) | Formula::Exists(_, a) => a.visit(f),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    /// Highest hierarchy level of any truth or `Acc` symbol, zero if none.
    pub fn max_level(&self) -> u32 {
        let mut m = 0;
        self.visit(&mut |f| match f {
            Formula::Truth { level, .. } | Formula::SimpleTruth { level, .. } | Formula::Acc { level, .. } => {
                m = m.max(*level)
            }
            _ => {}
        });
        m
    }

    /// Capture-avoiding substitution of `r` for the free occurrences of `v`.
    pub fn subst(&self, v: u32, r: &Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.subst(v, r), b.subst(v, r)),
            Formula::Truth { level, index, arg } => Formula::Truth {
                level: *level,
                index: index.clone(),
                arg: arg.subst(v, r),
            },
            Formula::SimpleTruth { level, arg } => Formula::SimpleTruth {
                level: *level,
                arg: arg.subst(v, r),
            },
            Formula::Acc { level, arg } => Formula::Acc {
                level: *level,
                arg: arg.subst(v, r),
            },
            Formula::Rel(rel, args) => Formula::Rel(*rel, args.iter().map(|t| t.subst(v, r)).collect()),
            Formula::Not(a) => Formula::not(a.subst(v, r)),
            Formula::And(a, b) => Formula::and(a.subst(v, r), b.subst(v, r)),
            Formula::Or(a, b) => Formula::or(a.subst(v, r), b.subst(v, r)),
            Formula::Implies(a, b) => Formula::implies(a.subst(v, r), b.subst(v, r)),
            Formula::Iff(a, b) => Formula::iff(a.subst(v, r), b.subst(v, r)),
            Formula::ForAll(y, body) | Formula::Exists(y, body) => {
                let universal = matches!(self, Formula::ForAll(..));
                let rebuild = |y, b| {
                    if universal {
                        Formula::forall(y, b)
                    } else {
                        Formula::exists(y, b)
                    }
                };
                if *y == v || !body.has_free(v) {
                    return self.clone();
                }
                if r.contains_var(*y) {
                    let mut avoid = body.all_vars();
                    r.vars_into(&mut avoid);
                    avoid.insert(v);
                    let z = avoid.last().unwrap() + 1;
                    let renamed = body.subst(*y, &Term::Var(z));
                    rebuild(z, renamed.subst(v, r))
                } else {
                    rebuild(*y, body.subst(v, r))
                }
            }
        }
    }

    /// Prefixes `∀` over every free variable, smallest index outermost.
    pub fn universal_closure(&self) -> Formula {
        let mut out = self.clone();
        for v in self.free_vars().into_iter().rev() {
            out = Formula::forall(v, out);
        }
        out
    }

    /// Exactly one free variable.
    pub fn is_predicate(&self) -> bool {
        self.free_vars().len() == 1
    }

    /// The free variable of a predicate.
    pub fn predicate_var(&self) -> Option<u32> {
        let fv = self.free_vars();
        if fv.len() == 1 {
            fv.into_iter().next()
        } else {
            None
        }
    }

    /// Instantiates the free variable of a predicate.
    pub fn apply(&self, t: &Term) -> Option<Formula> {
        Some(self.subst(self.predicate_var()?, t))
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        alpha(self, other, &mut Vec::new())
    }
}

fn lookup(env: &[(u32, u32)], v: u32, left: bool) -> Option<usize> {
    env.iter()
        .rposition(|&(l, r)| if left { l == v } else { r == v })
}

fn alpha_term(a: &Term, b: &Term, env: &[(u32, u32)]) -> bool {
    match (a, b) {
        (Term::Var(x), Term::Var(y)) => match (lookup(env, *x, true), lookup(env, *y, false)) {
            (None, None) => x == y,
            (Some(i), Some(j)) => i == j,
            _ => false,
        },
        (Term::Num(m), Term::Num(n)) => m == n,
        (Term::Succ(s), Term::Succ(t)) => alpha_term(s, t, env),
        (Term::Add(a1, a2), Term::Add(b1, b2)) | (Term::Mul(a1, a2), Term::Mul(b1, b2)) => {
            alpha_term(a1, b1, env) && alpha_term(a2, b2, env)
        }
        (Term::Fun(f, xs), Term::Fun(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, env))
        }
        _ => false,
    }
}

fn alpha(a: &Formula, b: &Formula, env: &mut Vec<(u32, u32)>) -> bool {
    use Formula as F;
    match (a, b) {
        (F::Eq(a1, a2), F::Eq(b1, b2)) => alpha_term(a1, b1, env) && alpha_term(a2, b2, env),
        (
            F::Truth { level: k, index: i, arg: s },
            F::Truth { level: l, index: j, arg: t },
        ) => k == l && i == j && alpha_term(s, t, env),
        (F::SimpleTruth { level: k, arg: s }, F::SimpleTruth { level: l, arg: t })
        | (F::Acc { level: k, arg: s }, F::Acc { level: l, arg: t }) => k == l && alpha_term(s, t, env),
        (F::Rel(r, xs), F::Rel(q, ys)) => {
            r == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(x, y)| alpha_term(x, y, env))
        }
        (F::Not(x), F::Not(y)) => alpha(x, y, env),
        (F::And(a1, a2), F::And(b1, b2))
        | (F::Or(a1, a2), F::Or(b1, b2))
        | (F::Implies(a1, a2), F::Implies(b1, b2))
        | (F::Iff(a1, a2), F::Iff(b1, b2)) => alpha(a1, b1, env) && alpha(a2, b2, env),
        (F::ForAll(x, s), F::ForAll(y, t)) | (F::Exists(x, s), F::Exists(y, t)) => {
            env.push((*x, *y));
            let ok = alpha(s, t, env);
            env.pop();
            ok
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::term::numeral;

    fn x(i: u32) -> Term {
        Term::var(i)
    }

    #[test]
    fn closure_orders_variables() {
        let f = Formula::eq(x(0), x(1));
        assert_eq!(
            f.universal_closure(),
            Formula::forall(0, Formula::forall(1, f.clone()))
        );
        let closed = Formula::eq(Term::zero(), Term::zero());
        assert_eq!(closed.universal_closure(), closed);
        assert_eq!(f.universal_closure().universal_closure(), f.universal_closure());
    }

    #[test]
    fn substitution_avoids_capture() {
        // (∀x1 x0 = x1)[x1/x0] must not bind the substituted x1
        let f = Formula::forall(1, Formula::eq(x(0), x(1)));
        let g = f.subst(0, &x(1));
        assert!(g.has_free(1));
        assert!(g.alpha_eq(&Formula::forall(2, Formula::eq(x(1), x(2)))));
        // bound occurrences stay untouched
        let h = Formula::forall(0, Formula::eq(x(0), Term::zero()));
        assert_eq!(h.subst(0, &numeral(5u32)), h);
    }

    #[test]
    fn predicates() {
        assert!(Formula::eq(x(0), Term::zero()).is_predicate());
        assert!(!Formula::eq(Term::zero(), Term::zero()).is_predicate());
        assert!(!Formula::eq(x(0), x(1)).is_predicate());
    }

    #[test]
    fn alpha_equivalence() {
        let a = Formula::forall(0, Formula::exists(1, Formula::eq(x(0), x(1))));
        let b = Formula::forall(5, Formula::exists(2, Formula::eq(x(5), x(2))));
        let c = Formula::forall(5, Formula::exists(2, Formula::eq(x(2), x(5))));
        assert!(a.alpha_eq(&b));
        assert!(!a.alpha_eq(&c));
        // a free variable never matches a bound one
        let d = Formula::forall(0, Formula::eq(x(0), x(1)));
        let e = Formula::forall(1, Formula::eq(x(1), x(1)));
        assert!(!d.alpha_eq(&e));
    }
}
