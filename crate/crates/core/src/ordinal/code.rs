//! Natural-number codes for ordinals and the total order `⪯` on all of ℕ.
//!
//! Valid codes come first, ordered as the ordinals they denote; every other
//! natural follows, ordered numerically. The order type is therefore
//! `Γ₀ + 1 + ω`, so every natural has an immediate `⪯`-successor.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use super::{Ordinal, VTerm};
use crate::bits::{BitReader, BitWriter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrdinalCode(pub BigUint);

impl OrdinalCode {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn encode(x: &Ordinal) -> OrdinalCode {
        let mut w = BitWriter::new();
        write_ordinal(&mut w, x);
        OrdinalCode(w.finish())
    }

    /// The ordinal denoted by this code, or `None` when the natural is not a
    /// well-formed normal-form code.
    pub fn decode(&self) -> Option<Ordinal> {
        let mut r = BitReader::new(&self.0)?;
        let x = read_ordinal(&mut r, 0)?;
        r.at_end().then_some(x)
    }

    pub fn is_valid(&self) -> bool {
        self.decode().is_some()
    }

    /// Total order on all naturals; see the module docs.
    pub fn cmp_order(&self, other: &OrdinalCode) -> Ordering {
        match (self.decode(), other.decode()) {
            (Some(x), Some(y)) => x.cmp(&y),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }

    pub fn preceq(&self, other: &OrdinalCode) -> bool {
        self.cmp_order(other) != Ordering::Greater
    }

    pub fn precedes(&self, other: &OrdinalCode) -> bool {
        self.cmp_order(other) == Ordering::Less
    }

    /// Immediate `⪯`-successor.
    pub fn successor(&self) -> OrdinalCode {
        match self.decode() {
            Some(Ordinal::Gamma0) => OrdinalCode::first_invalid_after(None),
            Some(x) => OrdinalCode::encode(&x.succ().expect("successor below Gamma_0")),
            None => OrdinalCode::first_invalid_after(Some(&self.0)),
        }
    }

    fn first_invalid_after(start: Option<&BigUint>) -> OrdinalCode {
        let mut n = match start {
            Some(s) => s + 1u32,
            None => BigUint::default(),
        };
        loop {
            let c = OrdinalCode(n);
            if !c.is_valid() {
                return c;
            }
            n = c.0 + 1u32;
        }
    }
}

/// Free-function form of [`OrdinalCode::preceq`].
pub fn preceq(m: &OrdinalCode, n: &OrdinalCode) -> bool {
    m.preceq(n)
}

impl From<&Ordinal> for OrdinalCode {
    fn from(x: &Ordinal) -> Self {
        OrdinalCode::encode(x)
    }
}

impl From<u64> for OrdinalCode {
    fn from(n: u64) -> Self {
        OrdinalCode(BigUint::from(n))
    }
}

impl fmt::Display for OrdinalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn write_ordinal(w: &mut BitWriter, x: &Ordinal) {
    match x {
        Ordinal::Zero => w.bit(false),
        Ordinal::Gamma0 => w.bits(0b11, 2),
        Ordinal::Sum(ts) => {
            w.bits(0b10, 2);
            w.gamma_u64(ts.len() as u64);
            for t in ts {
                write_ordinal(w, &t.a);
                write_ordinal(w, &t.b);
                w.gamma_u64(t.m);
            }
        }
    }
}

const MAX_DEPTH: usize = 512;

pub(crate) fn read_ordinal(r: &mut BitReader, depth: usize) -> Option<Ordinal> {
    if depth > MAX_DEPTH {
        return None;
    }
    if !r.bit()? {
        return Some(Ordinal::Zero);
    }
    if r.bit()? {
        return (depth == 0).then_some(Ordinal::Gamma0);
    }
    let len = r.gamma_u64()?;
    let mut terms = Vec::new();
    for _ in 0..len {
        let a = read_ordinal(r, depth + 1)?;
        let b = read_ordinal(r, depth + 1)?;
        let m = r.gamma_u64()?;
        terms.push(VTerm { a, b, m });
    }
    let x = Ordinal::Sum(terms);
    x.is_normal().then_some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn round_trips() {
        for s in ["0", "1", "w", "phi(1,0)", "G0", "w^w*3+w+7", "phi(phi(1,0),0)"] {
            let x = o(s);
            assert_eq!(OrdinalCode::encode(&x).decode(), Some(x));
        }
    }

    #[test]
    fn small_naturals_decode_consistently() {
        for n in 0u64..5000 {
            let c = OrdinalCode::from(n);
            if let Some(x) = c.decode() {
                assert_eq!(OrdinalCode::encode(&x), c, "{n}");
            }
        }
        assert!(!OrdinalCode::from(0).is_valid());
        assert!(!OrdinalCode::from(1).is_valid());
    }

    #[test]
    fn gamma0_only_at_top_level() {
        // Sum of one term (G0, 0, 1) must be rejected
        let mut w = BitWriter::new();
        w.bits(0b10, 2);
        w.gamma_u64(1);
        w.bits(0b11, 2);
        w.bit(false);
        w.gamma_u64(1);
        assert_eq!(OrdinalCode(w.finish()).decode(), None);
    }

    #[test]
    fn order_examples() {
        let one = OrdinalCode::encode(&o("1"));
        let w = OrdinalCode::encode(&o("w"));
        assert!(preceq(&one, &w));
        assert!(!preceq(&w, &one));
        let junk = OrdinalCode::from(0);
        assert!(OrdinalCode::encode(&Ordinal::Gamma0).precedes(&junk));
        assert!(junk.precedes(&OrdinalCode::from(1)));
    }

    #[test]
    fn successor_codes() {
        let w = OrdinalCode::encode(&o("w"));
        assert_eq!(w.successor().decode(), Some(o("w+1")));
        let top = OrdinalCode::encode(&Ordinal::Gamma0);
        let after = top.successor();
        assert!(!after.is_valid());
        assert!(top.precedes(&after));
        assert_eq!(after.successor(), OrdinalCode::from(1));
    }
}
