//! Ordinals below and including Γ₀ in Veblen normal form.
//!
//! A value is either zero, the distinguished top element Γ₀, or a finite sum
//! `φ_{a₁}(b₁)·m₁ + … + φ_{aₖ}(bₖ)·mₖ` of additive principal terms listed in
//! strictly decreasing order, where each term satisfies `bᵢ < φ_{aᵢ}(bᵢ)`.
//! Under those constraints the representation is unique, so structural
//! equality coincides with ordinal equality.

mod arith;
mod code;
mod fundamental;
mod text;

use std::cmp::Ordering;
use std::fmt;

pub use code::{preceq, OrdinalCode};
pub use fundamental::gamma;
pub use text::ParseOrdinalError;
pub(crate) use text::parse_prefix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrdinalError {
    #[error("result is not below or equal to Gamma_0")]
    OverflowBeyondGamma0,
    #[error("left operand exceeds the right operand")]
    NotSubtractable,
    #[error("ordinal is not a limit")]
    NotALimit,
    #[error("finite coefficient overflowed 64 bits")]
    CoefficientOverflow,
}

pub type Result<T> = std::result::Result<T, OrdinalError>;

/// One additive component `φ_a(b)·m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VTerm {
    a: Ordinal,
    b: Ordinal,
    m: u64,
}

impl VTerm {
    pub fn subscript(&self) -> &Ordinal {
        &self.a
    }

    pub fn argument(&self) -> &Ordinal {
        &self.b
    }

    pub fn multiplicity(&self) -> u64 {
        self.m
    }

    fn is_one(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Zero,
    Sum(Vec<VTerm>),
    Gamma0,
}

/// Three-way classification of an ordinal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Class {
    Zero,
    Successor(Ordinal),
    Limit,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::Zero
    }

    pub fn one() -> Self {
        Ordinal::nat(1)
    }

    pub fn nat(n: u64) -> Self {
        if n == 0 {
            Ordinal::Zero
        } else {
            Ordinal::Sum(vec![VTerm {
                a: Ordinal::Zero,
                b: Ordinal::Zero,
                m: n,
            }])
        }
    }

    pub fn omega() -> Self {
        Ordinal::principal(Ordinal::Zero, Ordinal::one())
    }

    pub fn epsilon0() -> Self {
        Ordinal::principal(Ordinal::one(), Ordinal::Zero)
    }

    pub fn gamma0() -> Self {
        Ordinal::Gamma0
    }

    /// `φ_a(b)` as a single term, without checking the normality side condition.
    pub(crate) fn principal(a: Ordinal, b: Ordinal) -> Self {
        Ordinal::Sum(vec![VTerm { a, b, m: 1 }])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Zero)
    }

    pub fn is_gamma0(&self) -> bool {
        matches!(self, Ordinal::Gamma0)
    }

    pub fn terms(&self) -> &[VTerm] {
        match self {
            Ordinal::Sum(ts) => ts,
            _ => &[],
        }
    }

    /// The value as a machine integer, when it is finite.
    pub fn as_finite(&self) -> Option<u64> {
        match self {
            Ordinal::Zero => Some(0),
            Ordinal::Sum(ts) if ts.len() == 1 && ts[0].is_one() => Some(ts[0].m),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// `(a, b)` when the value is a single additive principal `φ_a(b)`.
    pub fn as_principal(&self) -> Option<(&Ordinal, &Ordinal)> {
        match self {
            Ordinal::Sum(ts) if ts.len() == 1 && ts[0].m == 1 => Some((&ts[0].a, &ts[0].b)),
            _ => None,
        }
    }

    /// Checks every structural invariant recursively.
    pub fn is_normal(&self) -> bool {
        match self {
            Ordinal::Zero | Ordinal::Gamma0 => true,
            Ordinal::Sum(ts) => {
                if ts.is_empty() {
                    return false;
                }
                for t in ts {
                    if t.m == 0 || t.a.is_gamma0() || t.b.is_gamma0() {
                        return false;
                    }
                    if !t.a.is_normal() || !t.b.is_normal() {
                        return false;
                    }
                    // b is a fixed point of φ_a exactly when it is φ_c(d) with c > a
                    if matches!(t.b.as_principal(), Some((c, _)) if *c > t.a) {
                        return false;
                    }
                }
                ts.windows(2)
                    .all(|w| cmp_principal(&w[0].a, &w[0].b, &w[1].a, &w[1].b) == Ordering::Greater)
            }
        }
    }

    pub fn classify(&self) -> Class {
        match self {
            Ordinal::Zero => Class::Zero,
            Ordinal::Gamma0 => Class::Limit,
            Ordinal::Sum(ts) => {
                let last = ts.last().expect("sums are nonempty");
                if !last.is_one() {
                    return Class::Limit;
                }
                let mut pred = ts.clone();
                if last.m == 1 {
                    pred.pop();
                } else {
                    pred.last_mut().unwrap().m -= 1;
                }
                Class::Successor(if pred.is_empty() {
                    Ordinal::Zero
                } else {
                    Ordinal::Sum(pred)
                })
            }
        }
    }

    pub fn is_limit(&self) -> bool {
        self.classify() == Class::Limit
    }

    pub fn succ(&self) -> Result<Ordinal> {
        self.add(&Ordinal::one())
    }

    /// Largest nesting depth of the φ-tree; used to bound random generators.
    pub fn depth(&self) -> usize {
        self.terms()
            .iter()
            .map(|t| 1 + t.a.depth().max(t.b.depth()))
            .max()
            .unwrap_or(0)
    }
}

/// Compares `φ_a1(b1)` with `φ_a2(b2)`, both assumed normal.
pub(crate) fn cmp_principal(a1: &Ordinal, b1: &Ordinal, a2: &Ordinal, b2: &Ordinal) -> Ordering {
    match a1.cmp(a2) {
        Ordering::Equal => b1.cmp(b2),
        // a1 < a2: φ_a1(b1) < φ_a2(b2) iff b1 < φ_a2(b2)
        Ordering::Less => match cmp_below_principal(b1, a2, b2) {
            Ordering::Less => Ordering::Less,
            _ => Ordering::Greater,
        },
        Ordering::Greater => match cmp_below_principal(b2, a1, b1) {
            Ordering::Less => Ordering::Greater,
            _ => Ordering::Less,
        },
    }
}

/// Compares an arbitrary ordinal `x` with the principal `φ_a(b)`.
pub(crate) fn cmp_below_principal(x: &Ordinal, a: &Ordinal, b: &Ordinal) -> Ordering {
    match x {
        Ordinal::Zero => Ordering::Less,
        Ordinal::Gamma0 => Ordering::Greater,
        Ordinal::Sum(ts) => {
            let lead = &ts[0];
            match cmp_principal(&lead.a, &lead.b, a, b) {
                Ordering::Equal if ts.len() == 1 && lead.m == 1 => Ordering::Equal,
                Ordering::Equal => Ordering::Greater,
                o => o,
            }
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ordinal::Zero, Ordinal::Zero) | (Ordinal::Gamma0, Ordinal::Gamma0) => Ordering::Equal,
            (Ordinal::Zero, _) | (_, Ordinal::Gamma0) => Ordering::Less,
            (_, Ordinal::Zero) | (Ordinal::Gamma0, _) => Ordering::Greater,
            (Ordinal::Sum(xs), Ordinal::Sum(ys)) => {
                for (x, y) in xs.iter().zip(ys) {
                    let o = cmp_principal(&x.a, &x.b, &y.a, &y.b).then(x.m.cmp(&y.m));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                xs.len().cmp(&ys.len())
            }
        }
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Free-function form of [`Ord::cmp`].
pub fn compare(x: &Ordinal, y: &Ordinal) -> Ordering {
    x.cmp(y)
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print(self))
    }
}

impl std::str::FromStr for Ordinal {
    type Err = ParseOrdinalError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        text::parse(s)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::nat(n)
    }
}
