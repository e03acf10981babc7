//! Fundamental sequences and the sequence `γ_n` converging to Γ₀.
//!
//! The assignment mirrors how the suprema arise in the progressivity
//! arguments:
//!
//! | limit                  | `fs(·, n)`                         |
//! |------------------------|------------------------------------|
//! | `ω^(b+1)`              | `ω^b·n`                            |
//! | `ω^b`, `b` limit       | `ω^fs(b,n)`                        |
//! | `φ_a(b)`, `b` limit    | `φ_a(fs(b,n))`                     |
//! | `φ_a(0)`, `a` limit    | `φ_{fs(a,n)}(0)`                   |
//! | `φ_{a+1}(0)`           | `φ_a^n(φ_a(0)+1)`                  |
//! | `φ_{a+1}(b+1)`         | `φ_a^n(φ_{a+1}(b)+1)`              |
//! | `φ_a(b+1)`, `a` limit  | `φ_{fs(a,n)}(φ_a(b)+1)`            |
//! | `α + P·m`              | `α + P·(m-1) + fs(P,n)`            |
//! | `Γ₀`                   | `γ_n`                              |

use super::arith::iterate_veblen;
use super::{Class, Ordinal, OrdinalError, Result, VTerm};

/// `γ_0 = 0`, `γ_{n+1} = φ_{γ_n}(0)`.
pub fn gamma(n: u64) -> Ordinal {
    let mut g = Ordinal::Zero;
    for _ in 0..n {
        g = Ordinal::veblen(&g, &Ordinal::Zero).expect("gamma_n is below Gamma_0");
    }
    g
}

impl Ordinal {
    /// The `n`-th element of the fundamental sequence of a limit ordinal.
    pub fn fs(&self, n: u64) -> Result<Ordinal> {
        match self {
            Ordinal::Zero => Err(OrdinalError::NotALimit),
            Ordinal::Gamma0 => Ok(gamma(n)),
            Ordinal::Sum(ts) => {
                let last = ts.last().expect("sums are nonempty");
                if last.is_one() {
                    return Err(OrdinalError::NotALimit);
                }
                let mut prefix: Vec<VTerm> = ts[..ts.len() - 1].to_vec();
                if last.m > 1 {
                    let mut t = last.clone();
                    t.m -= 1;
                    prefix.push(t);
                }
                let head = if prefix.is_empty() {
                    Ordinal::Zero
                } else {
                    Ordinal::Sum(prefix)
                };
                head.add(&fs_principal(&last.a, &last.b, n)?)
            }
        }
    }
}

fn fs_principal(a: &Ordinal, b: &Ordinal, n: u64) -> Result<Ordinal> {
    if a.is_zero() {
        return match b.classify() {
            Class::Zero => Err(OrdinalError::NotALimit),
            Class::Successor(p) => Ordinal::veblen(&Ordinal::Zero, &p)?.mul(&Ordinal::nat(n)),
            Class::Limit => Ordinal::veblen(&Ordinal::Zero, &b.fs(n)?),
        };
    }
    match (a.classify(), b.classify()) {
        (_, Class::Limit) => Ordinal::veblen(a, &b.fs(n)?),
        (Class::Successor(p), Class::Zero) => {
            let start = Ordinal::veblen(&p, &Ordinal::Zero)?.succ()?;
            iterate_veblen(&p, start, n)
        }
        (Class::Limit, Class::Zero) => Ordinal::veblen(&a.fs(n)?, &Ordinal::Zero),
        (Class::Successor(p), Class::Successor(q)) => {
            let start = Ordinal::veblen(a, &q)?.succ()?;
            iterate_veblen(&p, start, n)
        }
        (Class::Limit, Class::Successor(q)) => {
            let start = Ordinal::veblen(a, &q)?.succ()?;
            Ordinal::veblen(&a.fs(n)?, &start)
        }
        (Class::Zero, _) => unreachable!("a is nonzero"),
    }
}
