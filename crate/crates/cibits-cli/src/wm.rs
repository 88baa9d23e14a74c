//! Watermark attack sweeps: embed, attack, extract, score — once per key
//! and intensity, with and without authentication — shaping the rows of
//! the robustness tables.

use anyhow::Result;
use cibits::attacklab::AttackSpec;
use cibits::imagery::{BitImage, BitPlaneSpec, GrayImage};
use cibits::stego::{embed, extract_scored, StegoKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttackKind {
    Crop,
    Rotate,
    Jpeg,
    Gauss,
}

impl AttackKind {
    pub fn name(&self) -> &'static str {
        match self {
            AttackKind::Crop => "crop",
            AttackKind::Rotate => "rotate",
            AttackKind::Jpeg => "jpeg",
            AttackKind::Gauss => "gauss",
        }
    }

    pub fn spec(&self, intensity: f64, noise_seed: u64) -> AttackSpec {
        match self {
            AttackKind::Crop => AttackSpec::Crop {
                size: intensity as u32,
            },
            AttackKind::Rotate => AttackSpec::Rotate {
                angle_deg: intensity,
            },
            AttackKind::Jpeg => AttackSpec::Jpeg {
                level: intensity as u32,
            },
            AttackKind::Gauss => AttackSpec::Gauss {
                sigma: intensity,
                seed: noise_seed,
            },
        }
    }

    /// The sweep the corresponding robustness table uses.
    pub fn default_sweep(&self) -> Vec<f64> {
        match self {
            AttackKind::Crop => vec![10.0, 50.0, 100.0, 200.0],
            AttackKind::Rotate => vec![2.0, 5.0, 10.0, 25.0],
            AttackKind::Jpeg => vec![2.0, 5.0, 10.0, 20.0],
            AttackKind::Gauss => vec![1.0, 2.0, 3.0, 5.0],
        }
    }
}

/// Mean similarities at one attack intensity.
#[derive(Debug, Clone, PartialEq)]
pub struct AttackRow {
    pub intensity: f64,
    pub unauth_similarity: f64,
    pub auth_similarity: f64,
}

/// Derives the i-th evaluation key from a base key, keeping the flags.
pub fn derive_key(base: &StegoKey, index: u32) -> StegoKey {
    let mut key = *base;
    key.x0 = key.x0.wrapping_add(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(index as u64 + 1));
    key.y0 = match key.y0 ^ (index.wrapping_mul(0x85EB_CA6B)) {
        0 => 1,
        v => v,
    };
    key.y0b = match key.y0b ^ (index.wrapping_mul(0xC2B2_AE35)) {
        0 => 1,
        v => v,
    };
    key
}

/// Embeds under `keys` derived keys, attacks, extracts, and averages the
/// similarity — once blind of authentication and once with it. The noise
/// seed varies per key so Gaussian runs stay independent.
#[allow(clippy::too_many_arguments)]
pub fn attack_table(
    cover: &GrayImage,
    watermark: &BitImage,
    base_key: &StegoKey,
    plane: &BitPlaneSpec,
    kind: AttackKind,
    intensities: &[f64],
    keys: u32,
    noise_seed: u64,
) -> Result<Vec<AttackRow>> {
    assert!(keys >= 1);
    let mut rows = Vec::with_capacity(intensities.len());
    for &intensity in intensities {
        let mut sums = [0.0f64; 2];
        for i in 0..keys {
            let run_seed = noise_seed ^ ((i as u64) << 32) ^ intensity.to_bits();
            let spec = kind.spec(intensity, run_seed);
            for (slot, authenticated) in [(0, false), (1, true)] {
                let mut key = derive_key(base_key, i);
                key.authenticated = authenticated;
                let stego = embed(cover, watermark, &key, plane)?;
                let attacked = spec.apply(&stego)?;
                let result = extract_scored(&attacked, &key, plane, watermark, Some(cover))?;
                sums[slot] += result.similarity;
            }
        }
        rows.push(AttackRow {
            intensity,
            unauth_similarity: sums[0] / keys as f64,
            auth_similarity: sums[1] / keys as f64,
        });
    }
    Ok(rows)
}

/// Extraction score of an image that was never watermarked: the no-mark
/// baseline near 50%.
pub fn unwatermarked_score(
    img: &GrayImage,
    watermark: &BitImage,
    key: &StegoKey,
    plane: &BitPlaneSpec,
) -> Result<f64> {
    Ok(extract_scored(img, key, plane, watermark, Some(img))?.similarity)
}
