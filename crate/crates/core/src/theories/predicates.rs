//! Named formulas: progressivity, the predicates `B_a^c` and `C`, jumps,
//! shifts, and the statements whose provability the hierarchy is about.

use super::{TheoryError, TheorySpec};
use crate::ordinal::{gamma, Ordinal, OrdinalCode};
use crate::syntax::{Formula, Layer, LanguageId, PrFun, PrRel, Term};

pub(crate) fn code_term(x: &Ordinal) -> Term {
    Term::Num(OrdinalCode::encode(x).0)
}

pub(crate) fn index_term(c: &OrdinalCode) -> Term {
    Term::Num(c.0.clone())
}

/// The two smallest variable indices absent from `a`.
fn two_fresh(a: &Formula) -> (u32, u32) {
    let used = a.all_vars();
    let mut free = (0..).filter(|v| !used.contains(v));
    (free.next().unwrap(), free.next().unwrap())
}

fn pred_var(a: &Formula) -> Result<u32, TheoryError> {
    a.predicate_var().ok_or(TheoryError::NotAPredicate)
}

/// `(∀y ≺ x) A(y) ↔ A(x)`.
fn prog_body(a: &Formula, v: u32, x: u32, y: u32) -> Formula {
    Formula::iff(
        Formula::forall(
            y,
            Formula::implies(Formula::prec(Term::var(y), Term::var(x)), a.subst(v, &Term::var(y))),
        ),
        a.subst(v, &Term::var(x)),
    )
}

/// Strong progressivity `∀x((∀y ≺ x) A(y) ↔ A(x))`.
pub fn mk_prog(a: &Formula) -> Result<Formula, TheoryError> {
    let v = pred_var(a)?;
    let (x, y) = two_fresh(a);
    Ok(Formula::forall(x, prog_body(a, v, x, y)))
}

/// Progressivity for arguments below `c`.
pub fn mk_prog_upto(a: &Formula, c: &OrdinalCode) -> Result<Formula, TheoryError> {
    let v = pred_var(a)?;
    let (x, y) = two_fresh(a);
    Ok(Formula::forall(
        x,
        Formula::implies(Formula::prec(Term::var(x), index_term(c)), prog_body(a, v, x, y)),
    ))
}

fn below_gamma0(c: &OrdinalCode) -> Result<Ordinal, TheoryError> {
    match c.decode() {
        None => Err(TheoryError::InvalidCode),
        Some(Ordinal::Gamma0) => Err(TheoryError::OutOfRange("index must lie below G0".into())),
        Some(x) => Ok(x),
    }
}

fn truth_level(lang: &LanguageId) -> Result<u32, TheoryError> {
    match lang.level() {
        0 => Err(TheoryError::OutOfRange("language has no truth layer".into())),
        k => Ok(k),
    }
}

/// `B_a^c(x0)`: every predicate of `L_{ω^a·c}` that is progressive holds,
/// according to `T_{ω^a·c}`, of `φ_a(x0)`. The top layer of `lang` fixes the
/// level of the truth predicate, the lower layers are kept.
pub fn mk_b(lang: &LanguageId, a: &OrdinalCode, c: &OrdinalCode) -> Result<Formula, TheoryError> {
    let k = truth_level(lang)?;
    let ao = below_gamma0(a)?;
    let co = below_gamma0(c)?;
    let i = OrdinalCode::encode(&Ordinal::index_of(&ao, &co)?);
    let li = lang.with_top(Layer::UpTo(i.clone()));
    let x0 = Term::var(0);
    let x1 = Term::var(1);
    let target = Term::fun(
        PrFun::ImpB,
        vec![
            Term::fun(PrFun::ProgB, vec![x1.clone()]),
            Term::fun(
                PrFun::G,
                vec![x1.clone(), Term::fun(PrFun::OPhi, vec![index_term(a), x0])],
            ),
        ],
    );
    Ok(Formula::forall(
        1,
        Formula::implies(
            Formula::rel(PrRel::IsPredL, vec![Term::Num(li.encode()), x1]),
            Formula::truth(k, i, target),
        ),
    ))
}

/// `C(x0)`: for every `c ≺ c0`, `T_{c0}` affirms progressivity of `B_{x0}^c`.
pub fn mk_c(lang: &LanguageId, c0: &OrdinalCode) -> Result<Formula, TheoryError> {
    let k = truth_level(lang)?;
    if !c0.is_valid() {
        return Err(TheoryError::InvalidCode);
    }
    let x1 = Term::var(1);
    let code = Term::fun(
        PrFun::ProgB,
        vec![Term::fun(
            PrFun::BCode,
            vec![Term::Num(lang.encode()), Term::var(0), x1.clone()],
        )],
    );
    Ok(Formula::forall(
        1,
        Formula::implies(
            Formula::prec(x1, index_term(c0)),
            Formula::truth(k, c0.clone(), code),
        ),
    ))
}

/// `J_A(b) = ∀a(A(a) → A(a + ω^b))`, a predicate in `b`.
pub fn mk_jump(a: &Formula) -> Result<Formula, TheoryError> {
    let v = pred_var(a)?;
    let (b, x) = two_fresh(a);
    let shifted = Term::fun(
        PrFun::OAdd,
        vec![
            Term::var(x),
            Term::fun(PrFun::OExp, vec![code_term(&Ordinal::omega()), Term::var(b)]),
        ],
    );
    Ok(Formula::forall(
        x,
        Formula::implies(a.subst(v, &Term::var(x)), a.subst(v, &shifted)),
    ))
}

/// `A(a + ·)`, keeping the free variable of `A`.
pub fn mk_shift(a: &Formula, by: &OrdinalCode) -> Result<Formula, TheoryError> {
    let v = pred_var(a)?;
    Ok(a.subst(v, &Term::fun(PrFun::OAdd, vec![index_term(by), Term::var(v)])))
}

/// `(A(0) ∧ ∀x(A → A(S x))) → ∀x A` for the variable `x`.
pub(crate) fn induction_instance(a: &Formula, x: u32) -> Formula {
    let vx = Term::var(x);
    Formula::implies(
        Formula::and(
            a.subst(x, &Term::zero()),
            Formula::forall(x, Formula::implies(a.clone(), a.subst(x, &Term::succ(vx)))),
        ),
        Formula::forall(x, a.clone()),
    )
}

/// `Prog_c(A) → (∀y ≺ c) A(y)`.
fn transfinite_induction(a: &Formula, c: &OrdinalCode) -> Result<Formula, TheoryError> {
    let v = pred_var(a)?;
    let (y, _) = two_fresh(a);
    let all_below = Formula::forall(
        y,
        Formula::implies(Formula::prec(Term::var(y), index_term(c)), a.subst(v, &Term::var(y))),
    );
    Ok(Formula::implies(mk_prog_upto(a, c)?, all_below))
}

/// The results whose statements can be built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    /// `S_a(θ)` proves that every theorem of `S_b(θ)` is true, for `b ≺ a`.
    SubsystemSoundness {
        theory: TheorySpec,
        a: OrdinalCode,
        b: OrdinalCode,
    },
    /// Under `Acc(ĉ0)`, `C` is progressive up to `c0 = Γ₀`; stated in `tord(θ)`.
    CProgressive { theory: TheorySpec },
    /// Transfinite induction up to `γ_{n+1}` for a predicate of `θ`, `n ≥ 2`.
    GammaStep {
        theory: TheorySpec,
        n: u64,
        predicate: Formula,
    },
    /// `Prog(A) → A(â)` for `a ≺ Γ₀`, in the least iterate containing `A`.
    IteratedInduction { a: OrdinalCode, predicate: Formula },
    /// `Prog_â(A) → (∀b ≺ â) A(b)` for a predicate of `θ`.
    TransfiniteInduction {
        theory: TheorySpec,
        a: OrdinalCode,
        predicate: Formula,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementOutput {
    pub formula: Formula,
    /// Theory in which the statement is asserted.
    pub theory: TheorySpec,
    pub language: LanguageId,
}

pub fn statement_of(s: &Statement) -> Result<StatementOutput, TheoryError> {
    let out = |formula, theory: TheorySpec| {
        let language = theory.language();
        StatementOutput {
            formula,
            theory,
            language,
        }
    };
    match s {
        Statement::SubsystemSoundness { theory, a, b } => {
            let sa = TheorySpec::subsystem(theory.clone(), a.clone())?;
            let sb = TheorySpec::subsystem(theory.clone(), b.clone())?;
            if !b.precedes(a) {
                return Err(TheoryError::OutOfRange("requires b below a".into()));
            }
            let f = Formula::forall(
                0,
                Formula::forall(
                    1,
                    Formula::implies(
                        Formula::rel(
                            PrRel::ProofOf,
                            vec![Term::Num(sb.encode()), Term::var(0), Term::var(1)],
                        ),
                        Formula::truth(sa.level(), a.clone(), Term::var(1)),
                    ),
                ),
            );
            Ok(out(f, sa))
        }
        Statement::CProgressive { theory } => {
            let host = TheorySpec::tarski_ord(theory.clone());
            let c0 = OrdinalCode::encode(&Ordinal::Gamma0);
            let c = mk_c(&host.language(), &c0)?;
            let f = Formula::implies(
                Formula::acc(host.level(), index_term(&c0)),
                mk_prog_upto(&c, &c0)?,
            );
            Ok(out(f, host))
        }
        Statement::GammaStep {
            theory,
            n,
            predicate,
        } => {
            if *n < 2 {
                return Err(TheoryError::OutOfRange("requires n >= 2".into()));
            }
            if !theory.language().contains(predicate) {
                return Err(TheoryError::LanguageMismatch);
            }
            let bound = OrdinalCode::encode(&gamma(n + 1));
            let f = transfinite_induction(predicate, &bound)?;
            let host = TheorySpec::tarski_ord(theory.clone());
            Ok(StatementOutput {
                formula: f,
                theory: host,
                language: theory.language(),
            })
        }
        Statement::IteratedInduction { a, predicate } => {
            below_gamma0(a)?;
            let v = pred_var(predicate)?;
            let m = predicate.max_level().max(1);
            let host = TheorySpec::tarski_iter(TheorySpec::PA, m)?;
            if !host.language().contains(predicate) {
                return Err(TheoryError::LanguageMismatch);
            }
            let f = Formula::implies(mk_prog(predicate)?, predicate.subst(v, &index_term(a)));
            Ok(out(f, host))
        }
        Statement::TransfiniteInduction {
            theory,
            a,
            predicate,
        } => {
            if !a.is_valid() {
                return Err(TheoryError::InvalidCode);
            }
            if !theory.language().contains(predicate) {
                return Err(TheoryError::LanguageMismatch);
            }
            Ok(out(transfinite_induction(predicate, a)?, theory.clone()))
        }
    }
}
