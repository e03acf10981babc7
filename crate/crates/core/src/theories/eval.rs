//! Evaluation of closed terms and atoms over the designated symbols.
//!
//! Functions are total: arguments outside a function's intended domain
//! (an invalid ordinal code, a natural that codes no formula, an ordinal
//! result above Γ₀) evaluate to `0`, which is neither a valid ordinal code
//! nor a formula code. The one exception is `oadd(x, 1̂)`, which always
//! yields the `⪯`-successor of `x`, so that successor reasoning holds on all
//! of ℕ. `fEnum` is the only partial function: it refuses indices above
//! [`FENUM_LIMIT`].

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::axioms::{axiom_enumerate, match_induction};
use super::predicates::{mk_b, mk_prog};
use super::TheorySpec;
use crate::ordinal::{Ordinal, OrdinalCode};
use crate::syntax::{godel_decode, godel_encode, subst_numeral, Formula, Layer, LanguageId, PrFun, PrRel, Term};

/// Largest index accepted by `fEnum` during evaluation.
pub const FENUM_LIMIT: u64 = 512;

pub fn eval_term(t: &Term) -> Option<BigUint> {
    match t {
        Term::Var(_) => None,
        Term::Num(n) => Some(n.clone()),
        Term::Succ(s) => Some(eval_term(s)? + 1u32),
        Term::Add(a, b) => Some(eval_term(a)? + eval_term(b)?),
        Term::Mul(a, b) => Some(eval_term(a)? * eval_term(b)?),
        Term::Fun(f, args) => {
            let vals = args.iter().map(eval_term).collect::<Option<Vec<_>>>()?;
            apply(*f, &vals)
        }
    }
}

fn ordinal_op(x: &BigUint, y: &BigUint, op: impl Fn(&Ordinal, &Ordinal) -> crate::ordinal::Result<Ordinal>) -> BigUint {
    let (Some(a), Some(b)) = (OrdinalCode(x.clone()).decode(), OrdinalCode(y.clone()).decode()) else {
        return BigUint::zero();
    };
    op(&a, &b).map_or_else(|_| BigUint::zero(), |r| OrdinalCode::encode(&r).0)
}

fn formula_op(x: &BigUint, op: impl Fn(Formula) -> Option<Formula>) -> BigUint {
    godel_decode(x)
        .and_then(op)
        .map_or_else(BigUint::zero, |f| godel_encode(&f))
}

fn formula_op2(x: &BigUint, y: &BigUint, op: impl Fn(Formula, Formula) -> Formula) -> BigUint {
    match (godel_decode(x), godel_decode(y)) {
        (Some(a), Some(b)) => godel_encode(&op(a, b)),
        _ => BigUint::zero(),
    }
}

fn apply(f: PrFun, v: &[BigUint]) -> Option<BigUint> {
    let zero = BigUint::zero;
    Some(match f {
        PrFun::OAdd => {
            if v[1] == OrdinalCode::encode(&Ordinal::one()).0 {
                OrdinalCode(v[0].clone()).successor().0
            } else {
                ordinal_op(&v[0], &v[1], |a, b| a.add(b))
            }
        }
        PrFun::OMul => ordinal_op(&v[0], &v[1], |a, b| a.mul(b)),
        PrFun::OExp => ordinal_op(&v[0], &v[1], |a, b| a.exp(b)),
        PrFun::OPhi => ordinal_op(&v[0], &v[1], Ordinal::veblen),
        PrFun::G => subst_numeral(&v[0], &v[1]).unwrap_or_else(|_| zero()),
        PrFun::FEnum => {
            let n = v[1].to_u64().filter(|n| *n <= FENUM_LIMIT)?;
            match TheorySpec::decode(&v[0]) {
                Some(theory) => axiom_enumerate(&theory, n as usize + 1)
                    .get(n as usize)
                    .map_or_else(zero, |(a, _)| godel_encode(a)),
                None => zero(),
            }
        }
        PrFun::ImpB => formula_op2(&v[0], &v[1], Formula::implies),
        PrFun::IffB => formula_op2(&v[0], &v[1], Formula::iff),
        PrFun::ConjB => formula_op2(&v[0], &v[1], Formula::and),
        PrFun::CloB => formula_op(&v[0], |a| Some(a.universal_closure())),
        PrFun::AllB => formula_op(&v[0], |a| Some(Formula::forall(a.predicate_var()?, a))),
        PrFun::ProgB => formula_op(&v[0], |a| mk_prog(&a).ok()),
        PrFun::TruthB => match v[0].to_u32().filter(|k| *k >= 1) {
            Some(level) => godel_encode(&Formula::truth(
                level,
                OrdinalCode(v[1].clone()),
                Term::Num(v[2].clone()),
            )),
            None => zero(),
        },
        PrFun::CutL => match LanguageId::decode(&v[0]).filter(|l| l.level() >= 1) {
            Some(l) => l.with_top(Layer::UpTo(OrdinalCode(v[1].clone()))).encode(),
            None => zero(),
        },
        PrFun::BCode => match LanguageId::decode(&v[0]) {
            Some(l) => mk_b(&l, &OrdinalCode(v[1].clone()), &OrdinalCode(v[2].clone()))
                .map_or_else(|_| zero(), |b| godel_encode(&b)),
            None => zero(),
        },
    })
}

fn formula_in(lang: &LanguageId, x: &BigUint) -> Option<Formula> {
    godel_decode(x).filter(|f| lang.contains(f))
}

/// Truth value of a closed equation or designated relation, `None` when the
/// atom is not of that kind or cannot be evaluated.
pub fn eval_atom(f: &Formula) -> Option<bool> {
    match f {
        Formula::Eq(a, b) => Some(eval_term(a)? == eval_term(b)?),
        Formula::Rel(r, args) => {
            let v = args.iter().map(eval_term).collect::<Option<Vec<_>>>()?;
            Some(relation(*r, &v))
        }
        _ => None,
    }
}

fn relation(r: PrRel, v: &[BigUint]) -> bool {
    if r == PrRel::Prec {
        return OrdinalCode(v[0].clone()).precedes(&OrdinalCode(v[1].clone()));
    }
    if r == PrRel::ProofOf {
        let Some(theory) = TheorySpec::decode(&v[0]) else {
            return false;
        };
        let Some(proof) = crate::proofs::Proof::decode(&v[1]) else {
            return false;
        };
        return match proof.conclusion() {
            Some(last) if godel_encode(last) == v[2] => crate::proofs::check(&theory, &proof).is_ok(),
            _ => false,
        };
    }
    let Some(lang) = LanguageId::decode(&v[0]) else {
        return false;
    };
    match r {
        PrRel::IsFormL => formula_in(&lang, &v[1]).is_some(),
        PrRel::IsPredL => formula_in(&lang, &v[1]).is_some_and(|f| f.is_predicate()),
        PrRel::IsIndL => godel_decode(&v[1])
            .and_then(|f| match_induction(&f))
            .is_some_and(|(a, _)| lang.contains(&a)),
        PrRel::DedL => match (formula_in(&lang, &v[1]), formula_in(&lang, &v[2]), formula_in(&lang, &v[3])) {
            (Some(a), Some(b), Some(c)) => b == Formula::implies(a, c),
            _ => false,
        },
        PrRel::GenL => match (formula_in(&lang, &v[1]), formula_in(&lang, &v[2])) {
            (Some(a), Some(Formula::ForAll(_, body))) => *body == a,
            _ => false,
        },
        PrRel::Prec | PrRel::ProofOf => unreachable!(),
    }
}
