//! Self-delimiting bit strings packed into naturals.
//!
//! Every code in this crate (ordinal codes, Gödel numbers, theory and
//! language codes) is a bit string written MSB-first behind a sentinel `1`
//! bit, so distinct strings always map to distinct naturals. Naturals inside
//! a string use Elias gamma coding.

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Default, Clone)]
pub(crate) struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bit(&mut self, b: bool) {
        self.bits.push(b);
    }

    /// Writes the low `width` bits of `v`, most significant first.
    pub fn bits(&mut self, v: u64, width: u32) {
        for i in (0..width).rev() {
            self.bits.push((v >> i) & 1 == 1);
        }
    }

    /// Elias gamma code of `n`, which must be at least one.
    pub fn gamma(&mut self, n: &BigUint) {
        debug_assert!(!n.is_zero());
        let len = n.bits();
        for _ in 1..len {
            self.bits.push(false);
        }
        for i in (0..len).rev() {
            self.bits.push(n.bit(i));
        }
    }

    pub fn gamma_u64(&mut self, n: u64) {
        debug_assert!(n > 0);
        let len = 64 - n.leading_zeros();
        for _ in 1..len {
            self.bits.push(false);
        }
        self.bits(n, len);
    }

    /// Gamma code of `n + 1`, so that zero is representable.
    pub fn natural(&mut self, n: &BigUint) {
        self.gamma(&(n + 1u32));
    }

    pub fn natural_u64(&mut self, n: u64) {
        match n.checked_add(1) {
            Some(m) => self.gamma_u64(m),
            None => self.gamma(&(BigUint::from(n) + 1u32)),
        }
    }

    pub fn finish(self) -> BigUint {
        let mut bytes = Vec::with_capacity(self.bits.len() / 8 + 2);
        let total = self.bits.len() + 1;
        let pad = (8 - total % 8) % 8;
        let mut acc: u8 = 0;
        let mut filled = 0;
        let stream = std::iter::repeat_n(false, pad)
            .chain(std::iter::once(true))
            .chain(self.bits);
        for b in stream {
            acc = (acc << 1) | b as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
        BigUint::from_bytes_be(&bytes)
    }
}

#[derive(Debug, Clone)]
pub(crate) struct BitReader {
    value: BigUint,
    /// Index of the next bit to read, counting down from just below the sentinel.
    next: u64,
    remaining: u64,
}

impl BitReader {
    /// Returns `None` for zero, which carries no sentinel bit.
    pub fn new(value: &BigUint) -> Option<Self> {
        if value.is_zero() {
            return None;
        }
        let len = value.bits() - 1;
        Some(Self {
            value: value.clone(),
            next: len,
            remaining: len,
        })
    }

    pub fn at_end(&self) -> bool {
        self.remaining == 0
    }

    pub fn bit(&mut self) -> Option<bool> {
        if self.remaining == 0 {
            return None;
        }
        self.next -= 1;
        self.remaining -= 1;
        Some(self.value.bit(self.next))
    }

    pub fn bits(&mut self, width: u32) -> Option<u64> {
        let mut v = 0u64;
        for _ in 0..width {
            v = (v << 1) | self.bit()? as u64;
        }
        Some(v)
    }

    pub fn gamma(&mut self) -> Option<BigUint> {
        let mut zeros = 0u64;
        while !self.bit()? {
            zeros += 1;
            if zeros > self.remaining {
                return None;
            }
        }
        let mut n = BigUint::one();
        for _ in 0..zeros {
            n <<= 1u32;
            if self.bit()? {
                n += 1u32;
            }
        }
        Some(n)
    }

    pub fn gamma_u64(&mut self) -> Option<u64> {
        let n = self.gamma()?;
        u64::try_from(&n).ok()
    }

    pub fn natural(&mut self) -> Option<BigUint> {
        Some(self.gamma()? - 1u32)
    }

    pub fn natural_u64(&mut self) -> Option<u64> {
        self.gamma_u64().map(|n| n - 1)
    }

    pub fn natural_u32(&mut self) -> Option<u32> {
        self.natural_u64().and_then(|n| u32::try_from(n).ok())
    }
}
