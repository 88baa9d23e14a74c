//! Embedding and extraction.
//!
//! Substitution writes the mixed watermark bits over the strategy-selected
//! LSCs (last writer wins on colliding indices) and extraction is blind.
//! Switch negates the strategy-selected LSC wherever the mixed bit is set;
//! the flips form an involution, so replaying them on the watermarked
//! image restores the original LSCs, and extraction recovers the mixed
//! bits as the XOR difference against the original cover (non-blind).
//! Neither mode ever touches an MSC bit.

use super::{build_strategy_u, mix, msc_digest, EmbedMode, StegoError, StegoKey};
use crate::imagery::{extract_plane, replace_plane, BitImage, BitPlaneSpec, GrayImage};

/// An extracted watermark with its similarity against a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct WatermarkResult {
    pub watermark: BitImage,
    /// Percentage of equal bits against the reference watermark.
    pub similarity: f64,
}

/// Percentage of equal bits between two equally sized watermarks. At or
/// below 50% the image was probably never watermarked.
pub fn similarity(a: &BitImage, b: &BitImage) -> Result<f64, StegoError> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(StegoError::DimensionMismatch {
            a_w: a.width(),
            a_h: a.height(),
            b_w: b.width(),
            b_h: b.height(),
        });
    }
    let total = a.bits().len();
    let differing = a.bits().xor_count(b.bits()).expect("equal dims");
    Ok(100.0 * (total - differing) as f64 / total as f64)
}

/// Embeds `watermark` into `cover` under `key`. MSC bits are bit-identical
/// to the cover afterwards.
pub fn embed(
    cover: &GrayImage,
    watermark: &BitImage,
    key: &StegoKey,
    plane: &BitPlaneSpec,
) -> Result<GrayImage, StegoError> {
    let capacity = plane.lsc_capacity(cover);
    let needed = watermark.bits().len();
    if needed == 0 {
        return Err(StegoError::EmptyWatermark);
    }
    if needed > capacity {
        return Err(StegoError::CapacityExceeded { needed, capacity });
    }
    let mixed = mix(watermark.bits(), key)?;
    let digest = key
        .authenticated
        .then(|| msc_digest(&extract_plane(cover, plane.msc_mask())));
    let strategy = build_strategy_u(key, needed, capacity, digest)?;
    let mut lsc = extract_plane(cover, plane.lsc_mask());
    match key.mode {
        EmbedMode::Substitute => {
            for (k, &idx) in strategy.indices().iter().enumerate() {
                lsc.set(idx, mixed.get(k));
            }
        }
        EmbedMode::Switch => {
            for (k, &idx) in strategy.indices().iter().enumerate() {
                if mixed.get(k) {
                    lsc.flip(idx);
                }
            }
        }
    }
    Ok(replace_plane(cover, plane.lsc_mask(), &lsc)?)
}

/// Recovers the watermark from `img`. Substitution mode is blind; switch
/// mode requires the original cover. In authenticated mode the strategy is
/// rebuilt from the digest of the received image's MSCs, so any MSC change
/// de-synchronizes extraction by design.
pub fn extract(
    img: &GrayImage,
    key: &StegoKey,
    plane: &BitPlaneSpec,
    w_dims: (u32, u32),
    original: Option<&GrayImage>,
) -> Result<BitImage, StegoError> {
    let capacity = plane.lsc_capacity(img);
    let count = w_dims.0 as usize * w_dims.1 as usize;
    if count == 0 {
        return Err(StegoError::EmptyWatermark);
    }
    if count > capacity {
        return Err(StegoError::CapacityExceeded {
            needed: count,
            capacity,
        });
    }
    let digest = key
        .authenticated
        .then(|| msc_digest(&extract_plane(img, plane.msc_mask())));
    let strategy = build_strategy_u(key, count, capacity, digest)?;
    let lsc = extract_plane(img, plane.lsc_mask());
    let mixed = match key.mode {
        EmbedMode::Substitute => strategy
            .indices()
            .iter()
            .map(|&idx| lsc.get(idx))
            .collect(),
        EmbedMode::Switch => {
            let orig = original.ok_or(StegoError::OriginalRequired)?;
            if orig.width() != img.width() || orig.height() != img.height() {
                return Err(StegoError::DimensionMismatch {
                    a_w: img.width(),
                    a_h: img.height(),
                    b_w: orig.width(),
                    b_h: orig.height(),
                });
            }
            let orig_lsc = extract_plane(orig, plane.lsc_mask());
            strategy
                .indices()
                .iter()
                .map(|&idx| lsc.get(idx) ^ orig_lsc.get(idx))
                .collect()
        }
    };
    let bits = mix(&mixed, key)?; // de-mix: both modes replay-invert
    Ok(BitImage::from_bits(w_dims.0, w_dims.1, bits)?)
}

/// Extraction plus similarity scoring against the reference watermark.
pub fn extract_scored(
    img: &GrayImage,
    key: &StegoKey,
    plane: &BitPlaneSpec,
    reference: &BitImage,
    original: Option<&GrayImage>,
) -> Result<WatermarkResult, StegoError> {
    let watermark = extract(
        img,
        key,
        plane,
        (reference.width(), reference.height()),
        original,
    )?;
    let similarity = similarity(&watermark, reference)?;
    Ok(WatermarkResult {
        watermark,
        similarity,
    })
}
