use std::cmp::Ordering;

use super::{cmp_principal, Ordinal, OrdinalError, Result, VTerm};

impl VTerm {
    fn cmp_value(&self, other: &VTerm) -> Ordering {
        cmp_principal(&self.a, &self.b, &other.a, &other.b)
    }

    /// Cantor-normal-form exponent of the principal part: `φ_a(b) = ω^e`.
    fn log(&self) -> Ordinal {
        if self.a.is_zero() {
            self.b.clone()
        } else {
            Ordinal::principal(self.a.clone(), self.b.clone())
        }
    }

    fn with_multiplicity(&self, m: u64) -> VTerm {
        VTerm {
            a: self.a.clone(),
            b: self.b.clone(),
            m,
        }
    }
}

fn sum(terms: Vec<VTerm>) -> Ordinal {
    if terms.is_empty() {
        Ordinal::Zero
    } else {
        Ordinal::Sum(terms)
    }
}

/// `ω^e` in normal form.
fn omega_pow(e: &Ordinal) -> Result<Ordinal> {
    Ordinal::veblen(&Ordinal::Zero, e)
}

impl Ordinal {
    /// The Veblen function `φ_a(b)`.
    ///
    /// When `b` is already a common fixed point of every `φ_{a'}` with
    /// `a' ≤ a`, that is when `b = φ_c(d)` for some `c > a`, the result is `b`
    /// itself.
    pub fn veblen(a: &Ordinal, b: &Ordinal) -> Result<Ordinal> {
        if a.is_gamma0() {
            return Err(OrdinalError::OverflowBeyondGamma0);
        }
        if b.is_gamma0() {
            return Ok(Ordinal::Gamma0);
        }
        if let Some((c, _)) = b.as_principal() {
            if c > a {
                return Ok(b.clone());
            }
        }
        Ok(Ordinal::principal(a.clone(), b.clone()))
    }

    pub fn add(&self, y: &Ordinal) -> Result<Ordinal> {
        match (self, y) {
            (_, Ordinal::Zero) => Ok(self.clone()),
            (Ordinal::Zero, _) => Ok(y.clone()),
            (Ordinal::Gamma0, _) => Err(OrdinalError::OverflowBeyondGamma0),
            (_, Ordinal::Gamma0) => Ok(Ordinal::Gamma0),
            (Ordinal::Sum(xs), Ordinal::Sum(ys)) => {
                let lead = &ys[0];
                let mut out = Vec::with_capacity(xs.len() + ys.len());
                for t in xs {
                    match t.cmp_value(lead) {
                        Ordering::Greater => out.push(t.clone()),
                        Ordering::Equal => {
                            let m = t
                                .m
                                .checked_add(lead.m)
                                .ok_or(OrdinalError::CoefficientOverflow)?;
                            out.push(lead.with_multiplicity(m));
                            out.extend_from_slice(&ys[1..]);
                            return Ok(Ordinal::Sum(out));
                        }
                        Ordering::Less => break,
                    }
                }
                out.extend_from_slice(ys);
                Ok(Ordinal::Sum(out))
            }
        }
    }

    pub fn mul(&self, y: &Ordinal) -> Result<Ordinal> {
        match (self, y) {
            (Ordinal::Zero, _) | (_, Ordinal::Zero) => Ok(Ordinal::Zero),
            (Ordinal::Gamma0, _) => {
                if y.as_finite() == Some(1) {
                    Ok(Ordinal::Gamma0)
                } else {
                    Err(OrdinalError::OverflowBeyondGamma0)
                }
            }
            (_, Ordinal::Gamma0) => Ok(Ordinal::Gamma0),
            (Ordinal::Sum(xs), Ordinal::Sum(ys)) => {
                let lead_log = xs[0].log();
                let mut acc = Ordinal::Zero;
                for t in ys {
                    let part = if t.is_one() {
                        // x·n = lead·(m·n) + rest
                        let m = xs[0]
                            .m
                            .checked_mul(t.m)
                            .ok_or(OrdinalError::CoefficientOverflow)?;
                        let mut ts = vec![xs[0].with_multiplicity(m)];
                        ts.extend_from_slice(&xs[1..]);
                        Ordinal::Sum(ts)
                    } else {
                        // x·ω^f = ω^(e₁+f) for f > 0
                        let p = omega_pow(&lead_log.add(&t.log())?)?;
                        p.mul_finite(t.m)?
                    };
                    acc = acc.add(&part)?;
                }
                Ok(acc)
            }
        }
    }

    fn mul_finite(&self, n: u64) -> Result<Ordinal> {
        self.mul(&Ordinal::nat(n))
    }

    pub fn exp(&self, y: &Ordinal) -> Result<Ordinal> {
        if y.is_zero() {
            return Ok(Ordinal::one());
        }
        if self.is_zero() {
            return Ok(Ordinal::Zero);
        }
        if self.as_finite() == Some(1) {
            return Ok(Ordinal::one());
        }
        if self.is_gamma0() {
            return if y.as_finite() == Some(1) {
                Ok(Ordinal::Gamma0)
            } else {
                Err(OrdinalError::OverflowBeyondGamma0)
            };
        }
        if y.is_gamma0() {
            return Ok(Ordinal::Gamma0);
        }
        let (infinite, n) = y.split_finite_tail();
        let finite_part = self.pow_finite(n)?;
        if infinite.is_zero() {
            return Ok(finite_part);
        }
        let high = match self.as_finite() {
            // k^(ω·y₁) = ω^y₁
            Some(_) => omega_pow(&infinite.div_omega())?,
            // x^(ω·y₁) = ω^(e₁·ω·y₁)
            None => omega_pow(&self.terms()[0].log().mul(&infinite)?)?,
        };
        high.mul(&finite_part)
    }

    fn pow_finite(&self, n: u64) -> Result<Ordinal> {
        if let Some(k) = self.as_finite() {
            let n32 = u32::try_from(n).map_err(|_| OrdinalError::CoefficientOverflow)?;
            return k
                .checked_pow(n32)
                .map(Ordinal::nat)
                .ok_or(OrdinalError::CoefficientOverflow);
        }
        // square-and-multiply; x^(2k) = (x^k)^2 holds for finite exponents
        let mut result = Ordinal::one();
        for i in (0..64 - n.leading_zeros()).rev() {
            result = result.mul(&result)?;
            if (n >> i) & 1 == 1 {
                result = result.mul(self)?;
            }
        }
        Ok(result)
    }

    /// Splits `y` as `y_inf + n` where `n` is the finite tail.
    fn split_finite_tail(&self) -> (Ordinal, u64) {
        match self {
            Ordinal::Sum(ts) if ts.last().is_some_and(VTerm::is_one) => {
                let n = ts.last().unwrap().m;
                (sum(ts[..ts.len() - 1].to_vec()), n)
            }
            _ => (self.clone(), 0),
        }
    }

    /// For `y` with no finite tail, the unique `z` with `ω·z = y`.
    fn div_omega(&self) -> Ordinal {
        let terms = self
            .terms()
            .iter()
            .map(|t| {
                let e = t.log();
                let e = match e.classify() {
                    _ if !e.is_finite() => e,
                    super::Class::Successor(p) => p,
                    _ => unreachable!("exponents of an infinite tail are positive"),
                };
                let p = omega_pow(&e).expect("exponent below Gamma_0");
                p.terms()[0].with_multiplicity(t.m)
            })
            .collect();
        sum(terms)
    }

    /// The unique `d` with `self + d = a`, given `self ≤ a`.
    pub fn subtract_left(&self, a: &Ordinal) -> Result<Ordinal> {
        if self > a {
            return Err(OrdinalError::NotSubtractable);
        }
        match (self, a) {
            _ if self == a => Ok(Ordinal::Zero),
            (Ordinal::Zero, _) => Ok(a.clone()),
            (_, Ordinal::Gamma0) => Ok(Ordinal::Gamma0),
            (Ordinal::Sum(xs), Ordinal::Sum(ys)) => {
                for (i, y) in ys.iter().enumerate() {
                    let Some(x) = xs.get(i) else {
                        return Ok(sum(ys[i..].to_vec()));
                    };
                    match x.cmp_value(y) {
                        Ordering::Equal if x.m == y.m => continue,
                        Ordering::Equal => {
                            let mut out = vec![y.with_multiplicity(y.m - x.m)];
                            out.extend_from_slice(&ys[i + 1..]);
                            return Ok(Ordinal::Sum(out));
                        }
                        _ => return Ok(sum(ys[i..].to_vec())),
                    }
                }
                unreachable!("self <= a and self != a")
            }
            _ => unreachable!("ordering excludes remaining shapes"),
        }
    }

    /// `ω^a·c`, the truth-predicate index used by the B-predicates.
    pub fn index_of(a: &Ordinal, c: &Ordinal) -> Result<Ordinal> {
        omega_pow(a)?.mul(c)
    }
}

/// `n`-fold application of `φ_a` to `start`.
pub(crate) fn iterate_veblen(a: &Ordinal, start: Ordinal, n: u64) -> Result<Ordinal> {
    let mut x = start;
    for _ in 0..n {
        x = Ordinal::veblen(a, &x)?;
    }
    Ok(x)
}
