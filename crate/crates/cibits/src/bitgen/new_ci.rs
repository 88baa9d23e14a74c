//! The CI(XORshift, XORshift) generator.
//!
//! Each round resets the mark vector, draws the flip count m from the
//! selector, then pulls positions from a second XORshift stream until m
//! distinct bits have been negated; draws that would revisit a position
//! already marked in the current round are discarded. The returned N-bit
//! states form the output, concatenated MSB-first (x_1 leads).

use std::collections::VecDeque;

use super::{GenError, Selector, SelectorKind, XorShift32, DISCARD_CAP};
use crate::bits::BitSeq;

/// How the per-round flip count m is derived from the first XORshift draw.
/// `Mod` is the deliberately degraded scheme m = y mod N kept for
/// comparison experiments; `G1`/`G2` are the binomial selectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorRule {
    G1,
    G2,
    Mod,
}

/// Full seed and configuration of a [`NewCi`] instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewCiParams {
    /// State width N in 2..=64.
    pub n_bits: u32,
    /// Initial state; x_1 is the most significant of the low N bits.
    pub x0: u64,
    /// Seed of the XORshift stream feeding the selector.
    pub y0: u32,
    /// Seed of the XORshift stream feeding the strategy positions.
    pub y0b: u32,
    pub rule: SelectorRule,
    /// When false the mark vector is disabled and repeated positions are
    /// flipped again (the "no mark" degraded variant).
    pub decimate: bool,
}

impl NewCiParams {
    /// Canonical parameters: G1 selector, decimation on.
    pub fn new(n_bits: u32, x0: u64, y0: u32, y0b: u32) -> Self {
        NewCiParams {
            n_bits,
            x0,
            y0,
            y0b,
            rule: SelectorRule::G1,
            decimate: true,
        }
    }
}

/// Where a round gets its m and its position proposals.
#[derive(Debug, Clone)]
pub enum RoundSource {
    /// The real thing: two XORshift streams plus the selector rule.
    XorShift {
        xs_m: XorShift32,
        xs_b: XorShift32,
        selector: Option<Selector>,
    },
    /// Injected m and b sequences, for driving worked traces through the
    /// round logic without reverse-engineering seeds.
    Scripted(ScriptedSource),
}

/// Finite injected m/b sequences; positions are 1-based as written in
/// worked traces.
#[derive(Debug, Clone)]
pub struct ScriptedSource {
    m: VecDeque<u32>,
    b: VecDeque<u32>,
}

impl ScriptedSource {
    pub fn new(n_bits: u32, m_seq: &[u32], b_seq_1based: &[u32]) -> Result<Self, GenError> {
        if let Some(&m) = m_seq.iter().find(|&&m| m > n_bits) {
            return Err(GenError::InvalidParam(format!(
                "scripted m = {m} exceeds N = {n_bits}"
            )));
        }
        if let Some(&b) = b_seq_1based.iter().find(|&&b| b == 0 || b > n_bits) {
            return Err(GenError::InvalidParam(format!(
                "scripted position {b} outside 1..={n_bits}"
            )));
        }
        Ok(ScriptedSource {
            m: m_seq.iter().copied().collect(),
            b: b_seq_1based.iter().copied().collect(),
        })
    }
}

impl RoundSource {
    fn next_m(&mut self, n_bits: u32) -> Result<u32, GenError> {
        match self {
            RoundSource::XorShift { xs_m, selector, .. } => {
                let y = xs_m.next_u32();
                Ok(match selector {
                    Some(sel) => sel.select(y),
                    None => y % n_bits,
                })
            }
            RoundSource::Scripted(s) => s
                .m
                .pop_front()
                .ok_or_else(|| GenError::Fault("scripted m sequence exhausted".into())),
        }
    }

    /// Next proposed position, 0-based (0 is x_1, the MSB).
    fn next_pos(&mut self, n_bits: u32) -> Result<u32, GenError> {
        match self {
            RoundSource::XorShift { xs_b, .. } => Ok(xs_b.next_u32() % n_bits),
            RoundSource::Scripted(s) => s
                .b
                .pop_front()
                .map(|b| b - 1)
                .ok_or_else(|| GenError::Fault("scripted b sequence exhausted".into())),
        }
    }
}

/// The new CI(XORshift, XORshift) generator.
#[derive(Debug, Clone)]
pub struct NewCi {
    n_bits: u32,
    state: u64,
    marks: u64,
    decimate: bool,
    source: RoundSource,
}

impl NewCi {
    pub fn from_params(p: &NewCiParams) -> Result<Self, GenError> {
        let selector = match p.rule {
            SelectorRule::G1 => Some(Selector::new(SelectorKind::G1, p.n_bits)?),
            SelectorRule::G2 => Some(Selector::new(SelectorKind::G2, p.n_bits)?),
            SelectorRule::Mod => {
                Selector::new(SelectorKind::G1, p.n_bits)?; // width check only
                None
            }
        };
        let source = RoundSource::XorShift {
            xs_m: XorShift32::new(p.y0)?,
            xs_b: XorShift32::new(p.y0b)?,
            selector,
        };
        Self::with_source(p.n_bits, p.x0, source, p.decimate)
    }

    /// Builds a generator over injected m/b sequences.
    pub fn scripted(
        n_bits: u32,
        x0: u64,
        m_seq: &[u32],
        b_seq_1based: &[u32],
        decimate: bool,
    ) -> Result<Self, GenError> {
        let source = RoundSource::Scripted(ScriptedSource::new(n_bits, m_seq, b_seq_1based)?);
        Self::with_source(n_bits, x0, source, decimate)
    }

    pub fn with_source(
        n_bits: u32,
        x0: u64,
        source: RoundSource,
        decimate: bool,
    ) -> Result<Self, GenError> {
        if !(2..=64).contains(&n_bits) {
            return Err(GenError::InvalidParam(format!(
                "state width must be in 2..=64, got {n_bits}"
            )));
        }
        if n_bits < 64 && (x0 >> n_bits) != 0 {
            return Err(GenError::InvalidParam(format!(
                "initial state {x0:#x} does not fit in {n_bits} bits"
            )));
        }
        Ok(NewCi {
            n_bits,
            state: x0,
            marks: 0,
            decimate,
            source,
        })
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    /// Current state as an integer; x_1 is the MSB of the low N bits.
    pub fn state(&self) -> u64 {
        self.state
    }

    /// One round: reset marks, draw m, flip until m distinct positions have
    /// been negated (or exactly m draws when decimation is disabled), and
    /// return the new state. m = 0 returns the previous state unchanged.
    pub fn next_state(&mut self) -> Result<u64, GenError> {
        let m = self.source.next_m(self.n_bits)?;
        debug_assert!(m <= self.n_bits);
        self.marks = 0;
        if self.decimate {
            let mut flipped = 0;
            let mut discards = 0u32;
            while flipped < m {
                let pos = self.source.next_pos(self.n_bits)?;
                let mask = 1u64 << (self.n_bits - 1 - pos);
                if self.marks & mask != 0 {
                    discards += 1;
                    if discards >= DISCARD_CAP {
                        return Err(GenError::Fault(format!(
                            "{DISCARD_CAP} consecutive discards in one round"
                        )));
                    }
                } else {
                    self.state ^= mask;
                    self.marks |= mask;
                    flipped += 1;
                    discards = 0;
                }
            }
        } else {
            for _ in 0..m {
                let pos = self.source.next_pos(self.n_bits)?;
                self.state ^= 1u64 << (self.n_bits - 1 - pos);
            }
        }
        Ok(self.state)
    }

    /// Concatenates successive returned states MSB-first (x_1 leads) into a
    /// sequence of exactly `count` bits, truncating the final state.
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
