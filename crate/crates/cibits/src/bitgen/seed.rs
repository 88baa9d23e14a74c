//! Time seeding: the microsecond digits of the current epoch time drive
//! the initial state and both XORshift seeds. Explicit-seed constructors
//! bypass all of this.

use std::time::{SystemTime, UNIX_EPOCH};

/// Seeds derived from one time reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeSeed {
    /// The raw reading: the microsecond digits of the epoch time.
    pub t: u64,
    /// Initial state, t mod 2^N.
    pub x0: u64,
    /// Selector-stream XORshift seed: t, coerced to 1 when t mod 2^32 = 0.
    pub y0: u32,
    /// Strategy-stream XORshift seed, decorrelated from y0 by a fixed
    /// constant and coerced nonzero.
    pub y0b: u32,
}

/// Derives the full seed tuple from a raw reading `t`.
pub fn seed_from_t(t: u64, n_bits: u32) -> TimeSeed {
    debug_assert!((2..=64).contains(&n_bits));
    let x0 = if n_bits == 64 { t } else { t & ((1 << n_bits) - 1) };
    let y0 = match t as u32 {
        0 => 1,
        v => v,
    };
    let y0b = match y0 ^ 0x9E37_79B9 {
        0 => 1,
        v => v,
    };
    TimeSeed { t, x0, y0, y0b }
}

/// Reads the clock and derives seeds from the microsecond digits.
pub fn seed_from_time(n_bits: u32) -> TimeSeed {
    let micros = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.subsec_micros() as u64)
        .unwrap_or(0);
    seed_from_t(micros, n_bits)
}

/// Logistic seed in (0,1) from a raw reading: (t mod 10^6 + 1)/(10^6 + 2).
pub fn logistic_seed_from_t(t: u64) -> f64 {
    ((t % 1_000_000) as f64 + 1.0) / 1_000_002.0
}
