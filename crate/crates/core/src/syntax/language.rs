//! Stratified languages.
//!
//! A language is the shared arithmetic signature together with one layer of
//! truth-like symbols per hierarchy level. Level `k` symbols live in layer
//! `k - 1`; the empty layer list is the base language of arithmetic.

use std::fmt;

use num_bigint::BigUint;

use super::formula::Formula;
use crate::bits::{BitReader, BitWriter};
use crate::ordinal::OrdinalCode;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Layer {
    /// The single unindexed truth predicate.
    Simple,
    /// `T_b` for every `b ≺ a`, and no `Acc`.
    UpTo(OrdinalCode),
    /// Only `Acc`; the language in which the top-level induction scheme lives.
    AccOnly,
    /// Every `T_b` together with `Acc`.
    FullWithAcc,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LanguageId {
    layers: Vec<Layer>,
}

impl LanguageId {
    pub fn base() -> Self {
        LanguageId::default()
    }

    pub fn from_layers(layers: Vec<Layer>) -> Self {
        LanguageId { layers }
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    /// Number of layers, i.e. the highest level with symbols.
    pub fn level(&self) -> u32 {
        self.layers.len() as u32
    }

    pub fn top(&self) -> Option<&Layer> {
        self.layers.last()
    }

    pub fn layer(&self, level: u32) -> Option<&Layer> {
        level
            .checked_sub(1)
            .and_then(|i| self.layers.get(i as usize))
    }

    pub fn push(&self, layer: Layer) -> Self {
        let mut layers = self.layers.clone();
        layers.push(layer);
        LanguageId { layers }
    }

    /// Same lower layers, top layer replaced.
    pub fn with_top(&self, layer: Layer) -> Self {
        let mut layers = self.layers.clone();
        match layers.last_mut() {
            Some(l) => *l = layer,
            None => layers.push(layer),
        }
        LanguageId { layers }
    }

    /// `L_a` at level `k`: full layers below, `UpTo(a)` at `k`.
    pub fn up_to(k: u32, a: OrdinalCode) -> Self {
        assert!(k >= 1, "levels start at one");
        let mut layers = vec![Layer::FullWithAcc; (k - 1) as usize];
        layers.push(Layer::UpTo(a));
        LanguageId { layers }
    }

    /// The full language with `Acc` at every level up to `k`.
    pub fn full(k: u32) -> Self {
        LanguageId {
            layers: vec![Layer::FullWithAcc; k as usize],
        }
    }

    pub fn admits_atom(&self, f: &Formula) -> bool {
        match f {
            Formula::Truth { level, index, .. } => match self.layer(*level) {
                Some(Layer::UpTo(a)) => index.precedes(a),
                Some(Layer::FullWithAcc) => true,
                _ => false,
            },
            Formula::SimpleTruth { level, .. } => matches!(self.layer(*level), Some(Layer::Simple)),
            Formula::Acc { level, .. } => {
                matches!(self.layer(*level), Some(Layer::FullWithAcc | Layer::AccOnly))
            }
            _ => true,
        }
    }

    pub fn contains(&self, f: &Formula) -> bool {
        let mut ok = true;
        f.visit(&mut |g| {
            if ok && g.is_atomic() && !self.admits_atom(g) {
                ok = false;
            }
        });
        ok
    }

    pub fn encode(&self) -> BigUint {
        let mut w = BitWriter::new();
        self.write(&mut w);
        w.finish()
    }

    pub(crate) fn write(&self, w: &mut BitWriter) {
        w.natural_u64(self.layers.len() as u64);
        for l in &self.layers {
            match l {
                Layer::Simple => w.bits(0, 2),
                Layer::UpTo(a) => {
                    w.bits(1, 2);
                    w.natural(a.value());
                }
                Layer::AccOnly => w.bits(2, 2),
                Layer::FullWithAcc => w.bits(3, 2),
            }
        }
    }

    pub fn decode(n: &BigUint) -> Option<LanguageId> {
        let mut r = BitReader::new(n)?;
        let l = LanguageId::read(&mut r)?;
        r.at_end().then_some(l)
    }

    pub(crate) fn read(r: &mut BitReader) -> Option<LanguageId> {
        let len = r.natural_u64()?;
        let mut layers = Vec::new();
        for _ in 0..len {
            layers.push(match r.bits(2)? {
                0 => Layer::Simple,
                1 => Layer::UpTo(OrdinalCode(r.natural()?)),
                2 => Layer::AccOnly,
                _ => Layer::FullWithAcc,
            });
        }
        Some(LanguageId { layers })
    }
}

/// Whether every truth or `Acc` occurrence in `f` is admitted by `lang`.
pub fn in_language(f: &Formula, lang: &LanguageId) -> bool {
    lang.contains(f)
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::Simple => f.write_str("simple"),
            Layer::UpTo(a) => match a.decode() {
                Some(x) => write!(f, "upto({x})"),
                None => write!(f, "upto(#{a})"),
            },
            Layer::AccOnly => f.write_str("acc"),
            Layer::FullWithAcc => f.write_str("full"),
        }
    }
}

impl fmt::Display for LanguageId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("PA")?;
        for l in &self.layers {
            write!(f, "/{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed language descriptor: {0}")]
pub struct ParseLanguageError(pub String);

impl std::str::FromStr for LanguageId {
    type Err = ParseLanguageError;

    /// `PA`, optionally followed by `/simple`, `/upto(<ordinal>)`, `/upto(#<n>)`,
    /// `/acc` or `/full` segments.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseLanguageError(s.to_string());
        let s = s.trim();
        let rest = s.strip_prefix("PA").ok_or_else(err)?;
        let mut layers = Vec::new();
        if rest.is_empty() {
            return Ok(LanguageId { layers });
        }
        let rest = rest.strip_prefix('/').ok_or_else(err)?;
        for seg in split_top_level(rest, '/') {
            let seg = seg.trim();
            layers.push(match seg {
                "simple" => Layer::Simple,
                "acc" => Layer::AccOnly,
                "full" => Layer::FullWithAcc,
                _ => {
                    let inner = seg
                        .strip_prefix("upto(")
                        .and_then(|x| x.strip_suffix(')'))
                        .ok_or_else(err)?;
                    Layer::UpTo(super::text::parse_index(inner).map_err(|_| err())?)
                }
            });
        }
        Ok(LanguageId { layers })
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}
