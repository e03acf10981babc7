//! Derivations with hypotheses, compiled into hypothesis-free proofs.
//!
//! Templates are written in a natural-deduction style: assume a formula,
//! derive consequences, then [`discharge`] the assumption with the deduction
//! theorem. [`compile`] flattens a closed derivation into proof lines, proving
//! each distinct formula only once.

use std::collections::HashMap;
use std::rc::Rc;

use super::{Justification, Line, LogicScheme, Proof};
use crate::syntax::{Formula, Term};

#[derive(Debug, Clone)]
pub(crate) struct D(Rc<Node>);

#[derive(Debug)]
enum Node {
    Leaf(Formula, Justification),
    Hyp(Formula),
    Mp { minor: D, major: D, concl: Formula },
    Gen { sub: D, var: u32, concl: Formula },
}

impl D {
    pub(crate) fn concl(&self) -> &Formula {
        match &*self.0 {
            Node::Leaf(f, _) | Node::Hyp(f) => f,
            Node::Mp { concl, .. } | Node::Gen { concl, .. } => concl,
        }
    }
}

fn node(n: Node) -> D {
    D(Rc::new(n))
}

pub(crate) fn logic(s: LogicScheme, f: Formula) -> D {
    debug_assert!(s.matches(&f), "{s}: {f}");
    node(Node::Leaf(f, Justification::LogicAxiom(s)))
}

pub(crate) fn axiom(f: Formula) -> D {
    node(Node::Leaf(f, Justification::NonlogicalAxiom))
}

pub(crate) fn comp(f: Formula) -> D {
    node(Node::Leaf(f, Justification::Computation))
}

pub(crate) fn hyp(f: Formula) -> D {
    node(Node::Hyp(f))
}

/// From `P` and `P → Q` infer `Q`.
pub(crate) fn mp(minor: D, major: D) -> D {
    let Formula::Implies(p, q) = major.concl() else {
        panic!("major premise is not an implication: {}", major.concl());
    };
    debug_assert!(p.alpha_eq(minor.concl()), "{} vs {}", p, minor.concl());
    let concl = (**q).clone();
    node(Node::Mp { minor, major, concl })
}

pub(crate) fn gen(sub: D, var: u32) -> D {
    let concl = Formula::forall(var, sub.concl().clone());
    node(Node::Gen { sub, var, concl })
}

/// `∀x P` to `P[t/x]`.
pub(crate) fn inst(d: D, t: &Term) -> D {
    let Formula::ForAll(x, p) = d.concl() else {
        panic!("not a universal formula: {}", d.concl());
    };
    let ax = Formula::implies(d.concl().clone(), p.subst(*x, t));
    mp(d, logic(LogicScheme::Q1, ax))
}

fn iff_parts(d: &D) -> (Formula, Formula) {
    match d.concl() {
        Formula::Iff(p, q) => ((**p).clone(), (**q).clone()),
        f => panic!("not a biconditional: {f}"),
    }
}

/// `P ↔ Q` to `P → Q`.
pub(crate) fn iff_lr(d: D) -> D {
    let (p, q) = iff_parts(&d);
    let ax = Formula::implies(d.concl().clone(), Formula::implies(p, q));
    mp(d, logic(LogicScheme::Iff1, ax))
}

/// `P ↔ Q` to `Q → P`.
pub(crate) fn iff_rl(d: D) -> D {
    let (p, q) = iff_parts(&d);
    let ax = Formula::implies(d.concl().clone(), Formula::implies(q, p));
    mp(d, logic(LogicScheme::Iff2, ax))
}

fn imp_parts(f: &Formula) -> (Formula, Formula) {
    match f {
        Formula::Implies(p, q) => ((**p).clone(), (**q).clone()),
        f => panic!("not an implication: {f}"),
    }
}

/// `P → R` and `Q → R` to `P ∨ Q → R`.
pub(crate) fn or_elim(left: D, right: D) -> D {
    let (p, r) = imp_parts(left.concl());
    let (q, _) = imp_parts(right.concl());
    let tail = Formula::implies(Formula::or(p, q), r);
    let ax = Formula::implies(
        left.concl().clone(),
        Formula::implies(right.concl().clone(), tail),
    );
    mp(right, mp(left, logic(LogicScheme::Or3, ax)))
}

/// `P → Q` and `Q → R` to `P → R`.
pub(crate) fn chain(first: D, second: D) -> D {
    let (p, _) = imp_parts(first.concl());
    let body = mp(mp(hyp(p.clone()), first), second);
    discharge(&p, &body)
}

/// `s = t` to `t = s`.
pub(crate) fn sym(d: D) -> D {
    let Formula::Eq(s, t) = d.concl().clone() else {
        panic!("not an equation: {}", d.concl());
    };
    let refl = Formula::eq(s.clone(), s.clone());
    let ax = Formula::implies(
        d.concl().clone(),
        Formula::implies(refl.clone(), Formula::eq(t, s)),
    );
    mp(logic(LogicScheme::Eq1, refl), mp(d, logic(LogicScheme::Eq2, ax)))
}

/// From `s = t` and `P`, infer `target`, which replaces occurrences of `s` in
/// `P` by `t`.
pub(crate) fn rewrite(eq: D, d: D, target: Formula) -> D {
    let ax = Formula::implies(
        eq.concl().clone(),
        Formula::implies(d.concl().clone(), target),
    );
    mp(d, mp(eq, logic(LogicScheme::Eq2, ax)))
}

/// `¬P` to `P → Q`.
pub(crate) fn ex_falso(d: D, q: Formula) -> D {
    let Formula::Not(p) = d.concl().clone() else {
        panic!("not a negation: {}", d.concl());
    };
    let nq_np = Formula::implies(Formula::not(q.clone()), d.concl().clone());
    let a1 = logic(LogicScheme::A1, Formula::implies(d.concl().clone(), nq_np.clone()));
    let a3 = logic(
        LogicScheme::A3,
        Formula::implies(nq_np, Formula::implies(*p, q)),
    );
    mp(mp(d, a1), a3)
}

/// `h → h`.
fn identity(h: &Formula) -> D {
    let hh = Formula::implies(h.clone(), h.clone());
    let h_hh_h = Formula::implies(h.clone(), Formula::implies(hh.clone(), h.clone()));
    let h_hh = Formula::implies(h.clone(), hh.clone());
    let a2 = logic(
        LogicScheme::A2,
        Formula::implies(h_hh_h.clone(), Formula::implies(h_hh.clone(), hh)),
    );
    mp(logic(LogicScheme::A1, h_hh), mp(logic(LogicScheme::A1, h_hh_h), a2))
}

/// Deduction theorem: turns a derivation of `Q`, possibly using the
/// hypothesis `h`, into a derivation of `h → Q` that does not use it.
///
/// Panics if the derivation generalizes over a variable free in `h`.
pub(crate) fn discharge(h: &Formula, d: &D) -> D {
    Discharger { h, cache: HashMap::new(), uses: HashMap::new() }.run(d)
}

struct Discharger<'a> {
    h: &'a Formula,
    cache: HashMap<Formula, D>,
    uses: HashMap<*const Node, bool>,
}

impl Discharger<'_> {
    /// Whether `d` depends on the hypothesis being discharged.
    fn uses(&mut self, d: &D) -> bool {
        let key = Rc::as_ptr(&d.0);
        if let Some(&u) = self.uses.get(&key) {
            return u;
        }
        let u = match &*d.0 {
            Node::Leaf(..) => false,
            Node::Hyp(f) => f == self.h,
            Node::Mp { minor, major, .. } => self.uses(minor) || self.uses(major),
            Node::Gen { sub, .. } => self.uses(sub),
        };
        self.uses.insert(key, u);
        u
    }

    fn run(&mut self, d: &D) -> D {
        if let Some(done) = self.cache.get(d.concl()) {
            return done.clone();
        }
        let h = self.h;
        let independent = !self.uses(d);
        let out = match &*d.0 {
            Node::Hyp(f) if f == h => identity(h),
            _ if independent => {
                let ax = Formula::implies(d.concl().clone(), Formula::implies(h.clone(), d.concl().clone()));
                mp(d.clone(), logic(LogicScheme::A1, ax))
            }
            Node::Leaf(..) | Node::Hyp(_) => unreachable!(),
            Node::Mp { minor, major, concl } => {
                let hp = self.run(minor);
                let hpq = self.run(major);
                let p = minor.concl().clone();
                let a2 = Formula::implies(
                    hpq.concl().clone(),
                    Formula::implies(
                        Formula::implies(h.clone(), p),
                        Formula::implies(h.clone(), concl.clone()),
                    ),
                );
                mp(hp, mp(hpq, logic(LogicScheme::A2, a2)))
            }
            Node::Gen { sub, var, concl } => {
                assert!(!h.has_free(*var), "cannot generalize x{var}: free in the hypothesis {h}");
                let hp = self.run(sub);
                let all = gen(hp, *var);
                let q2 = Formula::implies(
                    all.concl().clone(),
                    Formula::implies(h.clone(), concl.clone()),
                );
                mp(all, logic(LogicScheme::Q2, q2))
            }
        };
        self.cache.insert(d.concl().clone(), out.clone());
        out
    }
}

/// Flattens a derivation without open hypotheses into proof lines, ending in
/// its conclusion.
pub(crate) fn compile(d: &D) -> Proof {
    let mut lines: Vec<Line> = Vec::new();
    let mut index: HashMap<Formula, u32> = HashMap::new();
    // explicit stack: (node, children already emitted)
    let mut stack: Vec<(D, bool)> = vec![(d.clone(), false)];
    while let Some((cur, expanded)) = stack.pop() {
        if index.contains_key(cur.concl()) {
            continue;
        }
        let just = match &*cur.0 {
            Node::Leaf(_, j) => *j,
            Node::Hyp(f) => panic!("open hypothesis {f}"),
            Node::Mp { minor, major, .. } => {
                if !expanded {
                    stack.push((cur.clone(), true));
                    stack.push((major.clone(), false));
                    stack.push((minor.clone(), false));
                    continue;
                }
                Justification::ModusPonens(index[minor.concl()], index[major.concl()])
            }
            Node::Gen { sub, var, .. } => {
                if !expanded {
                    stack.push((cur.clone(), true));
                    stack.push((sub.clone(), false));
                    continue;
                }
                Justification::Generalization(index[sub.concl()], *var)
            }
        };
        let at = u32::try_from(lines.len()).expect("proof exceeds 32-bit line references");
        index.insert(cur.concl().clone(), at);
        lines.push(Line { formula: cur.concl().clone(), justification: just });
    }
    Proof { lines }
}
