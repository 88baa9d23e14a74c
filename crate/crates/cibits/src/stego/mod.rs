//! Chaos-based watermarking: mixing, strategy construction, embedding in
//! switch or substitution mode, extraction, and similarity scoring.
//!
//! All randomness flows from one [`NewCi`] generator seeded by the
//! [`StegoKey`]; in authenticated mode the seed is first perturbed by a
//! digest of the carrier's most significant coefficients, which makes the
//! embedding positions collapse to noise as soon as any MSC changes.

mod embed;
mod key;
mod mix;
mod strategy;

pub use embed::{embed, extract, extract_scored, similarity, WatermarkResult};
pub use key::{EmbedMode, KeyError, MixMode, StegoKey, DEFAULT_KEY_WIDTH};
pub use mix::{default_mix_iterations, mix, mix_chaotic, mix_xor};
pub use strategy::{build_strategy_u, msc_digest, StrategyU};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum StegoError {
    #[error("watermark needs {needed} LSC bits but the carrier provides {capacity}")]
    CapacityExceeded { needed: usize, capacity: usize },
    #[error("switch-mode extraction requires the original cover image")]
    OriginalRequired,
    #[error("image dimensions differ: {a_w}x{a_h} vs {b_w}x{b_h}")]
    DimensionMismatch {
        a_w: u32,
        a_h: u32,
        b_w: u32,
        b_h: u32,
    },
    #[error("empty watermark")]
    EmptyWatermark,
    #[error(transparent)]
    Generator(#[from] crate::bitgen::GenError),
    #[error(transparent)]
    Image(#[from] crate::imagery::ImageError),
}
