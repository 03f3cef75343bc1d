//! Exhaustive enumeration of the GF(q)-span of a set of generator words.
//!
//! The span is walked with a modular p-ary Gray code over GF(p)-generators
//! (each GF(q) generator times a GF(p)-basis of GF(q)), so every step adds a
//! single generator. Binary words are bit-packed.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field, Subfield};

/// Default cap on the number of enumerated words.
pub const DEFAULT_CAP: u128 = 1 << 24;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "XCYCLIC_CAP";

/// The cap from `XCYCLIC_CAP`, or [`DEFAULT_CAP`].
pub fn cap_from_env() -> u128 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

/// q^k as u128, saturating.
pub fn span_size(q: u64, k: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc = acc.saturating_mul(q as u128);
    }
    acc
}

pub fn check_cap(q: u64, k: usize, cap: u128) -> Result<()> {
    let size = span_size(q, k);
    if size > cap {
        return Err(Error::CapExceeded { size, cap });
    }
    Ok(())
}

/// The GF(q)-span of generator words with entries in the ambient field.
pub struct Span<'a> {
    field: &'a Field,
    len: usize,
    gens: Vec<Vec<Elem>>,
}

impl<'a> Span<'a> {
    /// `gens` span over `base`; the walk covers q^{gens.len()} words.
    pub fn new(field: &'a Field, base: Subfield, gens: &[Vec<Elem>], cap: u128) -> Result<Self> {
        check_cap(base.order(), gens.len(), cap)?;
        let len = gens.first().map_or(0, Vec::len);
        if let Some(bad) = gens.iter().find(|g| g.len() != len) {
            return Err(Error::LengthMismatch { expected: len, got: bad.len() });
        }
        // GF(p)-basis of GF(q): powers of the subfield generator.
        let eta = field.subfield_generator(base);
        let multipliers: Vec<Elem> = (0..base.degree() as u64).map(|b| field.pow(eta, b)).collect();
        let gens = gens
            .iter()
            .flat_map(|g| {
                multipliers
                    .iter()
                    .map(move |&w| g.iter().map(|&x| field.mul(w, x)).collect::<Vec<_>>())
            })
            .collect();
        Ok(Span { field, len, gens })
    }

    pub fn word_len(&self) -> usize {
        self.len
    }

    fn binary_entries(&self) -> bool {
        self.field.characteristic() == 2 && self.gens.iter().flatten().all(|e| e.0 <= 1)
    }

    /// Visits every word of the span, starting with zero.
    pub fn for_each(&self, mut visit: impl FnMut(&[Elem])) {
        let p = self.field.characteristic();
        let f = self.field;
        let mut word = vec![Elem::ZERO; self.len];
        visit(&word);
        let mut counter = vec![0u32; self.gens.len()];
        loop {
            // lowest counter digit that does not wrap decides the generator
            let Some(j) = counter.iter().position(|&d| d != p - 1) else {
                return;
            };
            for d in counter[..j].iter_mut() {
                *d = 0;
            }
            counter[j] += 1;
            if p == 2 {
                for (w, g) in word.iter_mut().zip(&self.gens[j]) {
                    w.0 ^= g.0;
                }
            } else {
                for (w, &g) in word.iter_mut().zip(&self.gens[j]) {
                    *w = f.add(*w, g);
                }
            }
            visit(&word);
        }
    }

    /// Visits every word as packed bits; only valid for binary entries.
    fn for_each_packed(&self, mut visit: impl FnMut(&[u64])) {
        let words = self.len.div_ceil(64);
        let packed: Vec<Vec<u64>> = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0u64; words];
                for (i, e) in g.iter().enumerate() {
                    if e.0 == 1 {
                        v[i / 64] |= 1 << (i % 64);
                    }
                }
                v
            })
            .collect();
        let mut word = vec![0u64; words];
        visit(&word);
        let total: u64 = 1u64 << self.gens.len();
        for i in 1..total {
            let j = i.trailing_zeros() as usize;
            for (w, g) in word.iter_mut().zip(&packed[j]) {
                *w ^= g;
            }
            visit(&word);
        }
    }

    /// Minimum Hamming weight over the nonzero words; `None` if the span is {0}.
    pub fn min_weight(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        if self.binary_entries() && self.gens.len() < 64 {
            self.for_each_packed(|w| {
                let wt = w.iter().map(|x| x.count_ones() as usize).sum::<usize>();
                if wt > 0 && best.is_none_or(|b| wt < b) {
                    best = Some(wt);
                }
            });
        } else {
            self.for_each(|w| {
                let wt = w.iter().filter(|e| !e.is_zero()).count();
                if wt > 0 && best.is_none_or(|b| wt < b) {
                    best = Some(wt);
                }
            });
        }
        best
    }

    /// Minimum over nonzero words of the number of nonzero `block`-sized
    /// chunks; with symbol-major expanded words this is the symbol weight.
    pub fn min_block_weight(&self, block: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        self.for_each(|w| {
            let wt = w.chunks(block).filter(|c| c.iter().any(|e| !e.is_zero())).count();
            if wt > 0 && best.is_none_or(|b| wt < b) {
                best = Some(wt);
            }
        });
        best
    }
}
