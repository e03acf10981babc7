use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Designated primitive-recursive function symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrFun {
    /// Ordinal sum on codes.
    OAdd,
    OMul,
    OExp,
    /// `ophi(a, b)` is the code of `φ_a(b)`.
    OPhi,
    /// Numeral substitution into a predicate code.
    G,
    /// `fEnum(θ, n)`: the `n`-th axiom code of theory `θ`.
    FEnum,
    ImpB,
    IffB,
    ConjB,
    /// Code of the universal closure.
    CloB,
    /// Code of `∀v A` for a predicate code with free variable `v`.
    AllB,
    /// Code of the strong progressivity sentence of a predicate code.
    ProgB,
    /// `truthB(k, b, x)` is the code of `T_{k,b}(x̂)`.
    TruthB,
    /// `cutL(ℓ, b)` replaces the top layer of language `ℓ` by `UpTo(b)`.
    CutL,
    /// `bCode(ℓ, a, c)` is the code of the predicate `B_a^c` over `ℓ`.
    BCode,
}

impl PrFun {
    pub const ALL: [PrFun; 15] = [
        PrFun::OAdd,
        PrFun::OMul,
        PrFun::OExp,
        PrFun::OPhi,
        PrFun::G,
        PrFun::FEnum,
        PrFun::ImpB,
        PrFun::IffB,
        PrFun::ConjB,
        PrFun::CloB,
        PrFun::AllB,
        PrFun::ProgB,
        PrFun::TruthB,
        PrFun::CutL,
        PrFun::BCode,
    ];

    pub fn arity(self) -> usize {
        match self {
            PrFun::CloB | PrFun::AllB | PrFun::ProgB => 1,
            PrFun::TruthB | PrFun::BCode => 3,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PrFun::OAdd => "oadd",
            PrFun::OMul => "omul",
            PrFun::OExp => "oexp",
            PrFun::OPhi => "ophi",
            PrFun::G => "g",
            PrFun::FEnum => "fEnum",
            PrFun::ImpB => "impB",
            PrFun::IffB => "iffB",
            PrFun::ConjB => "conjB",
            PrFun::CloB => "cloB",
            PrFun::AllB => "allB",
            PrFun::ProgB => "progB",
            PrFun::TruthB => "truthB",
            PrFun::CutL => "cutL",
            PrFun::BCode => "bCode",
        }
    }

    pub fn from_name(s: &str) -> Option<PrFun> {
        PrFun::ALL.into_iter().find(|f| f.name() == s)
    }

    pub(crate) fn id(self) -> u64 {
        PrFun::ALL.iter().position(|&f| f == self).unwrap() as u64
    }

    pub(crate) fn from_id(id: u64) -> Option<PrFun> {
        PrFun::ALL.get(id as usize).copied()
    }
}

/// Terms of first-order arithmetic extended by the designated symbols.
///
/// Closed successor chains over zero are stored compactly as `Num(n)`, so
/// `Term::succ(Term::zero())` and `Term::num(1)` are the same value. The raw
/// variant `Succ(Num(_))` is never produced by the constructors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(u32),
    Num(BigUint),
    Succ(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Fun(PrFun, Vec<Term>),
}

impl Term {
    pub fn var(i: u32) -> Term {
        Term::Var(i)
    }

    pub fn zero() -> Term {
        Term::Num(BigUint::zero())
    }

    pub fn num(n: impl Into<BigUint>) -> Term {
        Term::Num(n.into())
    }

    pub fn succ(t: Term) -> Term {
        match t {
            Term::Num(n) => Term::Num(n + 1u32),
            t => Term::Succ(Box::new(t)),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    /// Panics when the argument count does not match the symbol's arity.
    pub fn fun(f: PrFun, args: Vec<Term>) -> Term {
        assert_eq!(args.len(), f.arity(), "arity of {}", f.name());
        Term::Fun(f, args)
    }

    pub fn is_closed(&self) -> bool {
        match self {
            Term::Var(_) => false,
            Term::Num(_) => true,
            Term::Succ(t) => t.is_closed(),
            Term::Add(a, b) | Term::Mul(a, b) => a.is_closed() && b.is_closed(),
            Term::Fun(_, args) => args.iter().all(Term::is_closed),
        }
    }

    pub fn vars_into(&self, out: &mut BTreeSet<u32>) {
        match self {
            Term::Var(i) => {
                out.insert(*i);
            }
            Term::Num(_) => {}
            Term::Succ(t) => t.vars_into(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.vars_into(out);
                b.vars_into(out);
            }
            Term::Fun(_, args) => args.iter().for_each(|t| t.vars_into(out)),
        }
    }

    pub fn vars(&self) -> BTreeSet<u32> {
        let mut s = BTreeSet::new();
        self.vars_into(&mut s);
        s
    }

    pub fn contains_var(&self, v: u32) -> bool {
        match self {
            Term::Var(i) => *i == v,
            Term::Num(_) => false,
            Term::Succ(t) => t.contains_var(v),
            Term::Add(a, b) | Term::Mul(a, b) => a.contains_var(v) || b.contains_var(v),
            Term::Fun(_, args) => args.iter().any(|t| t.contains_var(v)),
        }
    }

    pub fn max_var(&self) -> Option<u32> {
        self.vars().last().copied()
    }

    /// Replaces every occurrence of `v` by `r`.
    pub fn subst(&self, v: u32, r: &Term) -> Term {
        match self {
            Term::Var(i) if *i == v => r.clone(),
            Term::Var(_) | Term::Num(_) => self.clone(),
            Term::Succ(t) => Term::succ(t.subst(v, r)),
            Term::Add(a, b) => Term::add(a.subst(v, r), b.subst(v, r)),
            Term::Mul(a, b) => Term::mul(a.subst(v, r), b.subst(v, r)),
            Term::Fun(f, args) => Term::Fun(*f, args.iter().map(|t| t.subst(v, r)).collect()),
        }
    }

    /// Rebuilds the term through the smart constructors, folding any
    /// `Succ(Num)` produced by hand.
    pub fn normalized(&self) -> Term {
        match self {
            Term::Var(_) | Term::Num(_) => self.clone(),
            Term::Succ(t) => Term::succ(t.normalized()),
            Term::Add(a, b) => Term::add(a.normalized(), b.normalized()),
            Term::Mul(a, b) => Term::mul(a.normalized(), b.normalized()),
            Term::Fun(f, args) => Term::Fun(*f, args.iter().map(Term::normalized).collect()),
        }
    }

    pub fn as_num(&self) -> Option<&BigUint> {
        match self {
            Term::Num(n) => Some(n),
            _ => None,
        }
    }

    /// Value in the standard model for terms built from `0`, `S`, `+`, `·`.
    pub fn eval_arith(&self) -> Option<BigUint> {
        match self {
            Term::Num(n) => Some(n.clone()),
            Term::Succ(t) => Some(t.eval_arith()? + BigUint::one()),
            Term::Add(a, b) => Some(a.eval_arith()? + b.eval_arith()?),
            Term::Mul(a, b) => Some(a.eval_arith()? * b.eval_arith()?),
            Term::Var(_) | Term::Fun(..) => None,
        }
    }
}

/// The canonical closed term denoting `n`: the `n`-fold successor of zero.
pub fn numeral(n: impl Into<BigUint>) -> Term {
    Term::Num(n.into())
}
