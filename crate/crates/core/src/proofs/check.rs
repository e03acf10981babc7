use super::{Justification, LogicScheme, Proof};
use crate::syntax::Formula;
use crate::theories::{axiom_check, eval_atom, Rejection, TheorySpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LineFault {
    #[error("proof has no lines")]
    Empty,
    #[error("formula is outside the theory's language")]
    OutsideLanguage,
    #[error("reference to line {0} does not point backwards")]
    ForwardReference(u32),
    #[error("not an instance of logic scheme {0}")]
    NotAnInstance(LogicScheme),
    #[error("not a nonlogical axiom: {0}")]
    NotAnAxiom(Rejection),
    #[error("computation line is not a closed designated atom or its negation")]
    NotComputable,
    #[error("computation line evaluates to false")]
    ComputationFails,
    #[error("modus ponens premises do not match")]
    BadModusPonens,
    #[error("generalization does not match its premise")]
    BadGeneralization,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {fault}")]
pub struct ProofError {
    pub line: usize,
    pub fault: LineFault,
}

/// Validates every line of `proof` against `theory`, stopping at the first
/// bad line.
pub fn check(theory: &TheorySpec, proof: &Proof) -> Result<(), ProofError> {
    if proof.lines.is_empty() {
        return Err(ProofError { line: 0, fault: LineFault::Empty });
    }
    let theory = theory.canonical();
    let lang = theory.language();
    for (idx, line) in proof.lines.iter().enumerate() {
        let fail = |fault| Err(ProofError { line: idx, fault });
        let f = &line.formula;
        if !lang.contains(f) {
            return fail(LineFault::OutsideLanguage);
        }
        let earlier = |i: u32| {
            if (i as usize) < idx {
                Ok(&proof.lines[i as usize].formula)
            } else {
                Err(ProofError { line: idx, fault: LineFault::ForwardReference(i) })
            }
        };
        match line.justification {
            Justification::LogicAxiom(s) => {
                if !s.matches(f) {
                    return fail(LineFault::NotAnInstance(s));
                }
            }
            Justification::NonlogicalAxiom => {
                if let Err(r) = axiom_check(&theory, f) {
                    return fail(LineFault::NotAnAxiom(r));
                }
            }
            Justification::Computation => computation(f).map_err(|fault| ProofError { line: idx, fault })?,
            Justification::ModusPonens(i, j) => {
                let (p, pq) = (earlier(i)?, earlier(j)?);
                let ok = matches!(pq, Formula::Implies(a, b) if a.alpha_eq(p) && b.alpha_eq(f));
                if !ok {
                    return fail(LineFault::BadModusPonens);
                }
            }
            Justification::Generalization(i, x) => {
                let p = earlier(i)?;
                let ok = matches!(f, Formula::ForAll(y, b) if *y == x && b.alpha_eq(p));
                if !ok {
                    return fail(LineFault::BadGeneralization);
                }
            }
        }
    }
    Ok(())
}

fn computation(f: &Formula) -> Result<(), LineFault> {
    let (atom, want) = match f {
        Formula::Not(a) => (&**a, false),
        a => (a, true),
    };
    if !f.is_sentence() {
        return Err(LineFault::NotComputable);
    }
    match eval_atom(atom) {
        Some(v) if v == want => Ok(()),
        Some(_) => Err(LineFault::ComputationFails),
        None => Err(LineFault::NotComputable),
    }
}
