//! Axiom recognizers and enumerators.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use super::predicates::{code_term, index_term, induction_instance, mk_prog};
use super::TheorySpec;
use crate::ordinal::{Ordinal, OrdinalCode};
use crate::syntax::{godel_decode, godel_encode, Formula, Layer, LanguageId, PrFun, PrRel, Term};

/// Which bullet of a theory's definition an axiom instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomGroup {
    /// The defining equations of successor, addition and multiplication.
    Arithmetic,
    /// Basic facts about `prec` and the successor `oadd(·, 1̂)`.
    PRDefinition,
    InductionScheme,
    TarskiAxiomsTrue,
    TarskiDeduction,
    OmegaRule,
    TScheme,
    /// Truth of every induction instance of the lower language.
    SaInductionTrue,
    SaCrossLevelTScheme,
    SaPersistence,
    ProgAcc,
    AccGate,
}

impl AxiomGroup {
    pub const ALL: [AxiomGroup; 12] = [
        AxiomGroup::Arithmetic,
        AxiomGroup::PRDefinition,
        AxiomGroup::InductionScheme,
        AxiomGroup::TarskiAxiomsTrue,
        AxiomGroup::TarskiDeduction,
        AxiomGroup::OmegaRule,
        AxiomGroup::TScheme,
        AxiomGroup::SaInductionTrue,
        AxiomGroup::SaCrossLevelTScheme,
        AxiomGroup::SaPersistence,
        AxiomGroup::ProgAcc,
        AxiomGroup::AccGate,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomGroup::Arithmetic => "Arithmetic",
            AxiomGroup::PRDefinition => "PRDefinition",
            AxiomGroup::InductionScheme => "InductionScheme",
            AxiomGroup::TarskiAxiomsTrue => "TarskiAxiomsTrue",
            AxiomGroup::TarskiDeduction => "TarskiDeduction",
            AxiomGroup::OmegaRule => "OmegaRule",
            AxiomGroup::TScheme => "TScheme",
            AxiomGroup::SaInductionTrue => "SaInductionTrue",
            AxiomGroup::SaCrossLevelTScheme => "SaCrossLevelTScheme",
            AxiomGroup::SaPersistence => "SaPersistence",
            AxiomGroup::ProgAcc => "ProgAcc",
            AxiomGroup::AccGate => "AccGate",
        }
    }

    pub fn from_name(s: &str) -> Option<AxiomGroup> {
        AxiomGroup::ALL.into_iter().find(|g| g.name() == s)
    }
}

impl fmt::Display for AxiomGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct Rejection(pub String);

/// The truth predicate a theory axiomatizes.
#[derive(Debug, Clone)]
enum Truth {
    Simple(u32),
    Indexed(u32, OrdinalCode),
}

impl Truth {
    fn at(&self, t: Term) -> Formula {
        match self {
            Truth::Simple(k) => Formula::simple_truth(*k, t),
            Truth::Indexed(k, a) => Formula::truth(*k, a.clone(), t),
        }
    }

    /// The argument of `f` when `f` is an application of this predicate.
    fn arg_of<'f>(&self, f: &'f Formula) -> Option<&'f Term> {
        match (self, f) {
            (Truth::Simple(k), Formula::SimpleTruth { level, arg }) if level == k => Some(arg),
            (Truth::Indexed(k, a), Formula::Truth { level, index, arg }) if level == k && index == a => Some(arg),
            _ => None,
        }
    }
}

fn v(i: u32) -> Term {
    Term::var(i)
}

fn num(n: BigUint) -> Term {
    Term::Num(n)
}

fn fun(f: PrFun, args: Vec<Term>) -> Term {
    Term::fun(f, args)
}

fn rel(r: PrRel, args: Vec<Term>) -> Formula {
    Formula::rel(r, args)
}

fn all(vars: &[u32], body: Formula) -> Formula {
    vars.iter().rev().fold(body, |acc, &x| Formula::forall(x, acc))
}

fn arithmetic_axioms() -> Vec<Formula> {
    let s = Term::succ;
    let z = Term::zero;
    vec![
        all(&[0], Formula::not(Formula::eq(s(v(0)), z()))),
        all(&[0, 1], Formula::implies(Formula::eq(s(v(0)), s(v(1))), Formula::eq(v(0), v(1)))),
        all(&[0], Formula::eq(Term::add(v(0), z()), v(0))),
        all(&[0, 1], Formula::eq(Term::add(v(0), s(v(1))), s(Term::add(v(0), v(1))))),
        all(&[0], Formula::eq(Term::mul(v(0), z()), z())),
        all(
            &[0, 1],
            Formula::eq(Term::mul(v(0), s(v(1))), Term::add(Term::mul(v(0), v(1)), v(0))),
        ),
    ]
}

fn order_axioms() -> Vec<Formula> {
    let p = Formula::prec;
    let one = code_term(&Ordinal::one());
    vec![
        all(&[0], Formula::not(p(v(0), code_term(&Ordinal::Zero)))),
        all(
            &[0, 1],
            Formula::iff(
                p(v(1), fun(PrFun::OAdd, vec![v(0), one])),
                Formula::or(p(v(1), v(0)), Formula::eq(v(1), v(0))),
            ),
        ),
        all(&[0], Formula::not(p(v(0), v(0)))),
        all(
            &[0, 1, 2],
            Formula::implies(Formula::and(p(v(0), v(1)), p(v(1), v(2))), p(v(0), v(2))),
        ),
        all(
            &[0, 1],
            Formula::or(Formula::or(p(v(0), v(1)), Formula::eq(v(0), v(1))), p(v(1), v(0))),
        ),
    ]
}

fn axioms_true(theory: &TheorySpec, t: &Truth) -> Formula {
    all(&[0], t.at(fun(PrFun::FEnum, vec![num(theory.encode()), v(0)])))
}

fn deduction_mp(lang: &LanguageId, t: &Truth) -> Formula {
    all(
        &[0, 1, 2],
        Formula::implies(
            rel(PrRel::DedL, vec![num(lang.encode()), v(0), v(1), v(2)]),
            Formula::implies(Formula::and(t.at(v(0)), t.at(v(1))), t.at(v(2))),
        ),
    )
}

fn deduction_gen(lang: &LanguageId, t: &Truth) -> Formula {
    all(
        &[0, 1],
        Formula::implies(
            rel(PrRel::GenL, vec![num(lang.encode()), v(0), v(1)]),
            Formula::implies(t.at(v(0)), t.at(v(1))),
        ),
    )
}

fn omega_rule(lang: &LanguageId, t: &Truth) -> Formula {
    all(
        &[0],
        Formula::implies(
            rel(PrRel::IsPredL, vec![num(lang.encode()), v(0)]),
            Formula::iff(
                Formula::forall(1, t.at(fun(PrFun::G, vec![v(0), v(1)]))),
                t.at(fun(PrFun::AllB, vec![v(0)])),
            ),
        ),
    )
}

fn induction_true(lang: &LanguageId, t: &Truth) -> Formula {
    all(
        &[0],
        Formula::implies(rel(PrRel::IsIndL, vec![num(lang.encode()), v(0)]), t.at(v(0))),
    )
}

fn cross_level(k: u32, a: &OrdinalCode, lower: &LanguageId) -> Formula {
    let coded = fun(
        PrFun::IffB,
        vec![
            fun(PrFun::CloB, vec![v(1)]),
            fun(PrFun::TruthB, vec![Term::num(k), v(0), v(1)]),
        ],
    );
    all(
        &[0, 1],
        Formula::implies(
            Formula::and(
                Formula::prec(v(0), index_term(a)),
                rel(
                    PrRel::IsFormL,
                    vec![fun(PrFun::CutL, vec![num(lower.encode()), v(0)]), v(1)],
                ),
            ),
            Formula::truth(k, a.clone(), coded),
        ),
    )
}

fn persistence(inner: &TheorySpec, k: u32, a: &OrdinalCode, b: &OrdinalCode) -> Formula {
    let lb = inner.language().push(Layer::UpTo(b.clone()));
    all(
        &[0],
        Formula::implies(
            rel(PrRel::IsFormL, vec![num(lb.encode()), v(0)]),
            Formula::iff(
                Formula::truth(k, b.clone(), v(0)),
                Formula::truth(k, a.clone(), v(0)),
            ),
        ),
    )
}

fn prog_acc(k: u32) -> Formula {
    mk_prog(&Formula::acc(k, v(0))).expect("Acc(x0) is a predicate")
}

fn t_scheme(a: &Formula, t: &Truth) -> Formula {
    Formula::iff(a.universal_closure(), t.at(num(godel_encode(a))))
}

/// Recovers `(A, x)` from an induction instance for `A` in the variable `x`.
pub(crate) fn match_induction(f: &Formula) -> Option<(Formula, u32)> {
    let Formula::Implies(lhs, rhs) = f else {
        return None;
    };
    let (Formula::And(..), Formula::ForAll(x, a)) = (&**lhs, &**rhs) else {
        return None;
    };
    if !a.has_free(*x) {
        return None;
    }
    induction_instance(a, *x)
        .alpha_eq(f)
        .then(|| ((**a).clone(), *x))
}

/// Everything the recognizer and the enumerator need to know about the
/// top layer of a canonical theory.
struct Layout {
    singles: Vec<(Formula, AxiomGroup)>,
    induction: LanguageId,
    t_scheme: Option<(LanguageId, Truth)>,
}

fn layout(t: &TheorySpec) -> Layout {
    match t {
        TheorySpec::PA => {
            let mut singles: Vec<_> = arithmetic_axioms()
                .into_iter()
                .map(|f| (f, AxiomGroup::Arithmetic))
                .collect();
            singles.extend(order_axioms().into_iter().map(|f| (f, AxiomGroup::PRDefinition)));
            Layout {
                singles,
                induction: LanguageId::base(),
                t_scheme: None,
            }
        }
        TheorySpec::Tarski(inner) => {
            let tr = Truth::Simple(t.level());
            let l = inner.language();
            Layout {
                singles: vec![
                    (axioms_true(inner, &tr), AxiomGroup::TarskiAxiomsTrue),
                    (deduction_mp(&l, &tr), AxiomGroup::TarskiDeduction),
                    (deduction_gen(&l, &tr), AxiomGroup::TarskiDeduction),
                    (omega_rule(&l, &tr), AxiomGroup::OmegaRule),
                ],
                induction: t.language(),
                t_scheme: Some((l, tr)),
            }
        }
        TheorySpec::SubsystemS(inner, a) => {
            let k = t.level();
            let tr = Truth::Indexed(k, a.clone());
            let la = inner.language().push(Layer::UpTo(a.clone()));
            Layout {
                singles: vec![
                    (axioms_true(inner, &tr), AxiomGroup::TarskiAxiomsTrue),
                    (deduction_mp(&la, &tr), AxiomGroup::TarskiDeduction),
                    (deduction_gen(&la, &tr), AxiomGroup::TarskiDeduction),
                    (induction_true(&la, &tr), AxiomGroup::SaInductionTrue),
                    (omega_rule(&la, &tr), AxiomGroup::OmegaRule),
                    (cross_level(k, a, &la), AxiomGroup::SaCrossLevelTScheme),
                ],
                induction: t.language(),
                t_scheme: Some((la, tr)),
            }
        }
        TheorySpec::TarskiOrd(inner) => Layout {
            singles: vec![(prog_acc(t.level()), AxiomGroup::ProgAcc)],
            induction: inner.language().push(Layer::AccOnly),
            t_scheme: None,
        },
        TheorySpec::TarskiIter(..) => layout(&t.canonical()),
    }
}

fn inner_theory(t: &TheorySpec) -> Option<&TheorySpec> {
    match t {
        TheorySpec::PA | TheorySpec::TarskiIter(..) => None,
        TheorySpec::Tarski(i) | TheorySpec::SubsystemS(i, _) | TheorySpec::TarskiOrd(i) => Some(i),
    }
}

type Verdict = Result<AxiomGroup, Option<String>>;

fn own_groups(t: &TheorySpec, f: &Formula) -> Verdict {
    let lay = layout(t);
    if let Some((_, g)) = lay.singles.iter().find(|(s, _)| s.alpha_eq(f)) {
        return Ok(*g);
    }
    if let Some((a, _)) = match_induction(f) {
        return if lay.induction.contains(&a) {
            Ok(AxiomGroup::InductionScheme)
        } else {
            Err(Some(format!(
                "induction instance for a formula outside the induction language {}",
                lay.induction
            )))
        };
    }
    if let (Some((lang, tr)), Formula::Iff(lhs, rhs)) = (&lay.t_scheme, f) {
        if let Some(arg) = tr.arg_of(rhs) {
            let Some(code) = arg.as_num() else {
                return Err(Some("T-scheme: truth argument is not a numeral".into()));
            };
            let Some(a) = godel_decode(code) else {
                return Err(Some("T-scheme: numeral is not a formula code".into()));
            };
            if !lang.contains(&a) {
                return Err(Some(format!("T-scheme: coded formula is outside {lang}")));
            }
            if !lhs.alpha_eq(&a.universal_closure()) {
                return Err(Some(
                    "T-scheme: left side is not the universal closure of the coded formula".into(),
                ));
            }
            return Ok(AxiomGroup::TScheme);
        }
    }
    match t {
        TheorySpec::SubsystemS(inner, a) => check_persistence(inner, t.level(), a, f),
        TheorySpec::TarskiOrd(inner) => check_acc_gate(inner, t.level(), f),
        _ => Err(None),
    }
}

fn check_persistence(inner: &TheorySpec, k: u32, a: &OrdinalCode, f: &Formula) -> Verdict {
    let Formula::ForAll(_, body) = f else {
        return Err(None);
    };
    let Formula::Implies(guard, iff) = &**body else {
        return Err(None);
    };
    let (Formula::Rel(PrRel::IsFormL, _), Formula::Iff(left, _)) = (&**guard, &**iff) else {
        return Err(None);
    };
    let Formula::Truth { level, index: b, .. } = &**left else {
        return Err(None);
    };
    if *level != k {
        return Err(None);
    }
    if !b.precedes(a) {
        return Err(Some("persistence: lower index is not below the theory index".into()));
    }
    if persistence(inner, k, a, b).alpha_eq(f) {
        Ok(AxiomGroup::SaPersistence)
    } else {
        Err(Some("persistence: malformed instance".into()))
    }
}

fn check_acc_gate(inner: &TheorySpec, k: u32, f: &Formula) -> Verdict {
    let Formula::Implies(lhs, body) = f else {
        return Err(None);
    };
    let Formula::Acc { level, arg } = &**lhs else {
        return Err(None);
    };
    if *level != k {
        return Err(None);
    }
    let Some(n) = arg.as_num() else {
        return Err(Some("Acc gate: index is not a numeral".into()));
    };
    let Ok(sa) = TheorySpec::subsystem(inner.clone(), OrdinalCode(n.clone())) else {
        return Err(Some("Acc gate: index is not a valid ordinal code".into()));
    };
    match check_canonical(&sa, body) {
        Ok(_) => Ok(AxiomGroup::AccGate),
        Err(r) => Err(Some(format!("Acc gate: not an axiom of {sa}: {r}"))),
    }
}

fn check_inner(t: &TheorySpec, f: &Formula) -> Verdict {
    let mut near = None;
    match own_groups(t, f) {
        Ok(g) => return Ok(g),
        Err(r) => near = near.or(r),
    }
    if let Some(inner) = inner_theory(t) {
        if inner.language().contains(f) {
            match check_inner(inner, f) {
                Ok(g) => return Ok(g),
                Err(r) => near = near.or(r),
            }
        }
    }
    Err(near)
}

fn check_canonical(t: &TheorySpec, f: &Formula) -> Result<AxiomGroup, Rejection> {
    let lang = t.language();
    if !lang.contains(f) {
        return Err(Rejection(format!("formula is outside the language {lang}")));
    }
    check_inner(t, f).map_err(|r| Rejection(r.unwrap_or_else(|| "matches no axiom shape".into())))
}

/// Decides whether `f` is a nonlogical axiom of `theory`, reporting its group.
pub fn axiom_check(theory: &TheorySpec, f: &Formula) -> Result<AxiomGroup, Rejection> {
    check_canonical(&theory.canonical(), f)
}

/// Membership in the union of all finite iterates `tord^n(base)`. Only the
/// iterate one level above the highest symbol of `f` needs to be consulted.
pub fn check_omega_iterate(base: &TheorySpec, f: &Formula) -> Result<(AxiomGroup, u32), Rejection> {
    let n = f.max_level().saturating_sub(base.level()) + 1;
    let t = TheorySpec::tarski_iter(base.clone(), n).expect("n >= 1");
    axiom_check(&t, f).map(|g| (g, n))
}

/// The first `budget` axioms of the theory's fixed enumeration.
pub fn axiom_enumerate(theory: &TheorySpec, budget: usize) -> Vec<(Formula, AxiomGroup)> {
    AxiomStream::new(theory).take(budget).collect()
}

/// Deterministic, restartable enumeration of a theory's axioms.
///
/// Groups take turns; the inherited axioms of the inner theory count as one
/// group. Scheme instances appear in increasing order of the Gödel code of
/// their parameter formula.
pub struct AxiomStream {
    groups: Vec<Group>,
    turn: usize,
}

enum Group {
    Fixed(VecDeque<(Formula, AxiomGroup)>),
    Inner(Box<AxiomStream>),
    Scan(Scanner),
    Persistence(Persist),
    AccGate(Box<AccGates>),
}

impl Group {
    fn next(&mut self) -> Option<(Formula, AxiomGroup)> {
        match self {
            Group::Fixed(q) => q.pop_front(),
            Group::Inner(s) => s.next(),
            Group::Scan(s) => s.next(),
            Group::Persistence(p) => p.next(),
            Group::AccGate(g) => g.next(),
        }
    }
}

impl AxiomStream {
    pub fn new(theory: &TheorySpec) -> Self {
        let t = theory.canonical();
        let lay = layout(&t);
        let mut groups = Vec::new();
        if let Some(inner) = inner_theory(&t) {
            groups.push(Group::Inner(Box::new(AxiomStream::new(inner))));
        }
        groups.push(Group::Fixed(lay.singles.into_iter().collect()));
        groups.push(Group::Scan(Scanner::new(ScanKind::Induction(lay.induction))));
        if let Some((lang, tr)) = lay.t_scheme {
            groups.push(Group::Scan(Scanner::new(ScanKind::TScheme(lang, tr))));
        }
        match &t {
            TheorySpec::SubsystemS(inner, a) => {
                groups.push(Group::Persistence(Persist::new((**inner).clone(), t.level(), a.clone())))
            }
            TheorySpec::TarskiOrd(inner) => {
                groups.push(Group::AccGate(Box::new(AccGates::new((**inner).clone(), t.level()))))
            }
            _ => {}
        }
        AxiomStream { groups, turn: 0 }
    }
}

impl Iterator for AxiomStream {
    type Item = (Formula, AxiomGroup);

    fn next(&mut self) -> Option<Self::Item> {
        while !self.groups.is_empty() {
            let i = self.turn % self.groups.len();
            if let Some(x) = self.groups[i].next() {
                self.turn = i + 1;
                return Some(x);
            }
            self.groups.remove(i);
            self.turn = i;
        }
        None
    }
}

enum ScanKind {
    Induction(LanguageId),
    TScheme(LanguageId, Truth),
}

/// Walks the naturals, turning every formula code that qualifies into
/// scheme instances.
struct Scanner {
    next: BigUint,
    kind: ScanKind,
    pending: VecDeque<(Formula, AxiomGroup)>,
}

impl Scanner {
    fn new(kind: ScanKind) -> Self {
        Scanner {
            next: BigUint::zero(),
            kind,
            pending: VecDeque::new(),
        }
    }

    fn next(&mut self) -> Option<(Formula, AxiomGroup)> {
        while self.pending.is_empty() {
            let code = self.next.clone();
            self.next += 1u32;
            let Some(a) = godel_decode(&code) else {
                continue;
            };
            match &self.kind {
                ScanKind::Induction(lang) if lang.contains(&a) => {
                    for x in a.free_vars() {
                        self.pending
                            .push_back((induction_instance(&a, x), AxiomGroup::InductionScheme));
                    }
                }
                ScanKind::TScheme(lang, tr) if lang.contains(&a) => {
                    self.pending.push_back((t_scheme(&a, tr), AxiomGroup::TScheme));
                }
                _ => {}
            }
        }
        self.pending.pop_front()
    }
}

/// Persistence axioms for `b ≺ a`: listed directly below a finite `a`,
/// otherwise found by scanning codes.
struct Persist {
    inner: TheorySpec,
    level: u32,
    a: OrdinalCode,
    finite: Option<(u64, u64)>,
    next: BigUint,
}

impl Persist {
    fn new(inner: TheorySpec, level: u32, a: OrdinalCode) -> Self {
        let finite = a.decode().and_then(|x| x.as_finite()).map(|m| (0, m));
        Persist {
            inner,
            level,
            a,
            finite,
            next: BigUint::zero(),
        }
    }

    fn next(&mut self) -> Option<(Formula, AxiomGroup)> {
        let b = match &mut self.finite {
            Some((i, m)) => {
                if *i >= *m {
                    return None;
                }
                *i += 1;
                OrdinalCode::encode(&Ordinal::nat(*i - 1))
            }
            None => loop {
                let c = OrdinalCode(self.next.clone());
                self.next += 1u32;
                if c.is_valid() && c.precedes(&self.a) {
                    break c;
                }
            },
        };
        Some((
            persistence(&self.inner, self.level, &self.a, &b),
            AxiomGroup::SaPersistence,
        ))
    }
}

/// `Acc(â) → A` dovetailed over pairs (index of `a`, index of `A` in the
/// enumeration of `S_a`).
struct AccGates {
    inner: TheorySpec,
    level: u32,
    codes: Vec<OrdinalCode>,
    scan: BigUint,
    streams: Vec<(AxiomStream, Vec<Formula>)>,
    diag: usize,
    pos: usize,
}

impl AccGates {
    fn new(inner: TheorySpec, level: u32) -> Self {
        AccGates {
            inner,
            level,
            codes: Vec::new(),
            scan: BigUint::zero(),
            streams: Vec::new(),
            diag: 0,
            pos: 0,
        }
    }

    fn next(&mut self) -> Option<(Formula, AxiomGroup)> {
        let (i, j) = (self.pos, self.diag - self.pos);
        if self.pos == self.diag {
            self.diag += 1;
            self.pos = 0;
        } else {
            self.pos += 1;
        }
        while self.codes.len() <= i {
            let c = OrdinalCode(self.scan.clone());
            self.scan += 1u32;
            if c.is_valid() {
                let sa = TheorySpec::subsystem(self.inner.clone(), c.clone()).expect("valid code");
                self.streams.push((AxiomStream::new(&sa), Vec::new()));
                self.codes.push(c);
            }
        }
        let (stream, seen) = &mut self.streams[i];
        while seen.len() <= j {
            seen.push(stream.next()?.0);
        }
        let gate = Formula::implies(
            Formula::acc(self.level, index_term(&self.codes[i])),
            seen[j].clone(),
        );
        Some((gate, AxiomGroup::AccGate))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn code(s: &str) -> OrdinalCode {
        OrdinalCode::encode(&s.parse::<Ordinal>().unwrap())
    }

    #[test]
    fn pa_enumeration_starts_with_arithmetic() {
        let first = axiom_enumerate(&TheorySpec::PA, 3);
        assert_eq!(first[0], (arithmetic_axioms()[0].clone(), AxiomGroup::Arithmetic));
        assert_eq!(first[1].1, AxiomGroup::InductionScheme);
    }

    #[test]
    fn enumerated_axioms_are_recognized() {
        let theories = [
            TheorySpec::PA,
            TheorySpec::tarski(TheorySpec::PA),
            TheorySpec::subsystem(TheorySpec::PA, code("3")).unwrap(),
            TheorySpec::tarski_ord(TheorySpec::PA),
        ];
        for t in theories {
            for (f, g) in axiom_enumerate(&t, 60) {
                assert_eq!(axiom_check(&t, &f), Ok(g), "{t}: {f}");
            }
        }
    }

    #[test]
    fn t_scheme_instance() {
        let t = TheorySpec::tarski(TheorySpec::PA);
        let a = parse_formula("x0 = x0").unwrap();
        let inst = t_scheme(&a, &Truth::Simple(1));
        assert_eq!(axiom_check(&t, &inst), Ok(AxiomGroup::TScheme));
        assert!(axiom_check(&t, &parse_formula("0 = S(0)").unwrap()).is_err());
    }

    #[test]
    fn finite_persistence_lists() {
        let t = TheorySpec::subsystem(TheorySpec::PA, code("2")).unwrap();
        let p: Vec<_> = axiom_enumerate(&t, 200)
            .into_iter()
            .filter(|(_, g)| *g == AxiomGroup::SaPersistence)
            .collect();
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn rejection_reasons() {
        let t = TheorySpec::tarski(TheorySpec::PA);
        let bad = Formula::iff(
            parse_formula("0 = 0").unwrap(),
            Formula::simple_truth(1, Term::num(godel_encode(&parse_formula("0 = S(0)").unwrap()))),
        );
        let r = axiom_check(&t, &bad).unwrap_err();
        assert!(r.0.contains("universal closure"), "{r}");
        let outside = Formula::acc(1, Term::zero());
        assert!(axiom_check(&t, &outside).unwrap_err().0.contains("outside the language"));
    }

    #[test]
    fn acc_gate_needs_an_axiom_of_the_stage() {
        let t = TheorySpec::tarski_ord(TheorySpec::PA);
        let a = code("w");
        let sa = TheorySpec::subsystem(TheorySpec::PA, a.clone()).unwrap();
        let ax = axiom_enumerate(&sa, 5).pop().unwrap().0;
        let gate = Formula::implies(Formula::acc(1, index_term(&a)), ax.clone());
        assert_eq!(axiom_check(&t, &gate), Ok(AxiomGroup::AccGate));
        let junk = Formula::implies(Formula::acc(1, index_term(&a)), parse_formula("0 = S(0)").unwrap());
        assert!(axiom_check(&t, &junk).is_err());
        let invalid = Formula::implies(Formula::acc(1, Term::num(0u32)), ax);
        assert!(axiom_check(&t, &invalid).unwrap_err().0.contains("valid ordinal code"));
    }
}
