//! The embedding strategy U: a dyadic recurrence over successive generator
//! states that decides which LSC receives each watermark bit.

use super::{StegoError, StegoKey};
use crate::bits::BitSeq;

/// Sequence of LSC indices, one per watermark bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyU {
    indices: Vec<usize>,
}

impl StrategyU {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// True when some LSC index is targeted by more than one watermark
    /// bit. Substitution is lossless exactly on collision-free strategies.
    pub fn has_collisions(&self) -> bool {
        let max = match self.indices.iter().max() {
            Some(&m) => m,
            None => return false,
        };
        let mut seen = vec![false; max + 1];
        for &i in &self.indices {
            if seen[i] {
                return true;
            }
            seen[i] = true;
        }
        false
    }
}

/// U^0 = S^0 mod M; U^{n+1} = (S^{n+1} + 2*U^n + n) mod M, with S the
/// successive generator states. The doubling term is the dyadic map on
/// the index torus: one different S entry diverges the whole tail.
/// In authenticated mode the generator seed is perturbed by the MSC
/// digest before any state is drawn.
pub fn build_strategy_u(
    key: &StegoKey,
    count: usize,
    modulus: usize,
    msc_digest: Option<u64>,
) -> Result<StrategyU, StegoError> {
    assert!(modulus >= 1);
    let digest = if key.authenticated { msc_digest } else { None };
    let mut gen = key.generator(digest)?;
    let states = std::iter::repeat_with(move || gen.next_state());
    strategy_from_states(states, count, modulus)
}

/// The recurrence itself, over any state source.
pub(crate) fn strategy_from_states<I>(
    states: I,
    count: usize,
    modulus: usize,
) -> Result<StrategyU, StegoError>
where
    I: IntoIterator<Item = Result<u64, crate::bitgen::GenError>>,
{
    let m = modulus as u128;
    let mut indices = Vec::with_capacity(count);
    let mut u: u128 = 0;
    for (n, s) in states.into_iter().take(count).enumerate() {
        let s = s? as u128;
        u = if n == 0 {
            s % m
        } else {
            (s + 2 * u + (n as u128 - 1)) % m
        };
        indices.push(u as usize);
    }
    Ok(StrategyU { indices })
}

/// Deterministic 64-bit digest of an MSC bit-plane: XOR of its packed
/// 64-bit chunks (MSB-first, zero-padded tail). Any single-bit change in
/// the plane changes exactly one digest bit.
pub fn msc_digest(msc_bits: &BitSeq) -> u64 {
    msc_bits.words().iter().fold(0, |acc, &w| acc ^ w)
}
