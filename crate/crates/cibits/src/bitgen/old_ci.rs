//! The old CI(Logistic, Logistic) generator, kept for comparison.
//!
//! Each round draws one iterate from the first logistic map to pick
//! m = d + c (d is 1 when the iterate exceeds 0.5), then flips m + 1
//! positions drawn from the second map as floor(100000 * b) mod N. There
//! is no mark vector, so a position may be flipped several times within a
//! round and the flips can cancel.

use super::{GenError, LogisticMap};
use crate::bits::BitSeq;

#[derive(Debug, Clone)]
pub struct OldCi {
    n_bits: u32,
    c: u32,
    lm_a: LogisticMap,
    lm_b: LogisticMap,
    state: u64,
}

impl OldCi {
    /// `c` must be at least 3N.
    pub fn new(
        n_bits: u32,
        c: u32,
        x0: u64,
        lm_a: LogisticMap,
        lm_b: LogisticMap,
    ) -> Result<Self, GenError> {
        if !(2..=64).contains(&n_bits) {
            return Err(GenError::InvalidParam(format!(
                "state width must be in 2..=64, got {n_bits}"
            )));
        }
        if c < 3 * n_bits {
            return Err(GenError::InvalidParam(format!(
                "c = {c} must be at least 3N = {}",
                3 * n_bits
            )));
        }
        if n_bits < 64 && (x0 >> n_bits) != 0 {
            return Err(GenError::InvalidParam(format!(
                "initial state {x0:#x} does not fit in {n_bits} bits"
            )));
        }
        Ok(OldCi {
            n_bits,
            c,
            lm_a,
            lm_b,
            state: x0,
        })
    }

    /// Canonical configuration c = 3N.
    pub fn with_default_c(
        n_bits: u32,
        x0: u64,
        lm_a: LogisticMap,
        lm_b: LogisticMap,
    ) -> Result<Self, GenError> {
        Self::new(n_bits, 3 * n_bits, x0, lm_a, lm_b)
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    /// One round: m + 1 flips at positions floor(100000 * b) mod N.
    /// Degenerate logistic orbits propagate as errors.
    pub fn next_state(&mut self) -> Result<u64, GenError> {
        let a = self.lm_a.next_f64()?;
        let d: u32 = if a > 0.5 { 1 } else { 0 };
        let m = d + self.c;
        for _ in 0..=m {
            let b = self.lm_b.next_f64()?;
            let pos = (100_000.0 * b).floor() as u64 % self.n_bits as u64;
            self.state ^= 1u64 << (self.n_bits as u64 - 1 - pos);
        }
        Ok(self.state)
    }

    /// Concatenates successive states MSB-first into `count` bits.
    pub fn bits(&mut self, count: usize) -> Result<BitSeq, GenError> {
        let mut out = BitSeq::with_capacity(count);
        while out.len() < count {
            let st = self.next_state()?;
            let take = (self.n_bits as usize).min(count - out.len()) as u32;
            out.push_bits_msb(st >> (self.n_bits - take), take);
        }
        Ok(out)
    }
}
