//! Attack simulators used against watermarked images: zeroing crop,
//! rotation round trip, JPEG-like compression, and additive Gaussian
//! noise. Every attack preserves the image dimensions and is
//! deterministic (noise under its seed).

mod jpeg;

pub use jpeg::jpeg_like;

use crate::bitgen::XorShift32;
use crate::imagery::GrayImage;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AttackError {
    #[error("crop rectangle {x},{y} {w}x{h} exceeds image bounds {img_w}x{img_h}")]
    CropOutOfBounds {
        x: u32,
        y: u32,
        w: u32,
        h: u32,
        img_w: u32,
        img_h: u32,
    },
    #[error("JPEG level {0} outside 1..=100")]
    BadLevel(u32),
    #[error("negative noise deviation {0}")]
    NegativeSigma(f64),
}

/// Resampling filter for the rotation attack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Resampling {
    #[default]
    Nearest,
    Bilinear,
}

/// One attack with its intensity parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AttackSpec {
    /// Zero a centered size x size square.
    Crop { size: u32 },
    /// Rotate by the angle and back.
    Rotate { angle_deg: f64 },
    /// DCT quantization at the given compression level.
    Jpeg { level: u32 },
    /// Seeded additive Gaussian noise.
    Gauss { sigma: f64, seed: u64 },
}

impl AttackSpec {
    pub fn apply(&self, img: &GrayImage) -> Result<GrayImage, AttackError> {
        match *self {
            AttackSpec::Crop { size } => {
                let (x, y) = centered_rect(img, size);
                crop_zero(img, x, y, size.min(img.width()), size.min(img.height()))
            }
            AttackSpec::Rotate { angle_deg } => {
                Ok(rotate_roundtrip(img, angle_deg, Resampling::Nearest))
            }
            AttackSpec::Jpeg { level } => jpeg_like(img, level),
            AttackSpec::Gauss { sigma, seed } => gaussian_noise(img, sigma, seed),
        }
    }

    pub fn intensity(&self) -> f64 {
        match *self {
            AttackSpec::Crop { size } => size as f64,
            AttackSpec::Rotate { angle_deg } => angle_deg,
            AttackSpec::Jpeg { level } => level as f64,
            AttackSpec::Gauss { sigma, .. } => sigma,
        }
    }
}

/// Top-left corner of a centered size x size square.
pub fn centered_rect(img: &GrayImage, size: u32) -> (u32, u32) {
    (
        (img.width().saturating_sub(size)) / 2,
        (img.height().saturating_sub(size)) / 2,
    )
}

/// Zeroes the rectangle; everything else is untouched.
pub fn crop_zero(img: &GrayImage, x: u32, y: u32, w: u32, h: u32) -> Result<GrayImage, AttackError> {
    if x.saturating_add(w) > img.width() || y.saturating_add(h) > img.height() {
        return Err(AttackError::CropOutOfBounds {
            x,
            y,
            w,
            h,
            img_w: img.width(),
            img_h: img.height(),
        });
    }
    let mut out = img.clone();
    for row in y..y + h {
        for col in x..x + w {
            out.set(col, row, 0);
        }
    }
    Ok(out)
}

/// Rotates by `theta` degrees about the image center (w/2, h/2), sampling
/// pixel centers; out-of-frame samples become 0.
pub fn rotate(img: &GrayImage, theta_deg: f64, resampling: Resampling) -> GrayImage {
    let (w, h) = (img.width(), img.height());
    let (cx, cy) = (w as f64 / 2.0, h as f64 / 2.0);
    let (sin, cos) = theta_deg.to_radians().sin_cos();
    let mut out = GrayImage::new(w, h).expect("same dims");
    for y in 0..h {
        for x in 0..w {
            // Inverse map: destination pixel center back to the source.
            let dx = x as f64 + 0.5 - cx;
            let dy = y as f64 + 0.5 - cy;
            let sx = cos * dx + sin * dy + cx;
            let sy = -sin * dx + cos * dy + cy;
            let v = match resampling {
                Resampling::Nearest => sample_nearest(img, sx, sy),
                Resampling::Bilinear => sample_bilinear(img, sx, sy),
            };
            out.set(x, y, v);
        }
    }
    out
}

fn sample_nearest(img: &GrayImage, sx: f64, sy: f64) -> u8 {
    // Pixel i covers [i, i+1); its center sits at i + 0.5.
    let ix = sx.floor();
    let iy = sy.floor();
    if ix < 0.0 || iy < 0.0 || ix >= img.width() as f64 || iy >= img.height() as f64 {
        0
    } else {
        img.get(ix as u32, iy as u32)
    }
}

fn sample_bilinear(img: &GrayImage, sx: f64, sy: f64) -> u8 {
    let fx = sx - 0.5;
    let fy = sy - 0.5;
    let x0 = fx.floor();
    let y0 = fy.floor();
    let tx = fx - x0;
    let ty = fy - y0;
    let pick = |x: f64, y: f64| -> f64 {
        if x < 0.0 || y < 0.0 || x >= img.width() as f64 || y >= img.height() as f64 {
            0.0
        } else {
            img.get(x as u32, y as u32) as f64
        }
    };
    let v = pick(x0, y0) * (1.0 - tx) * (1.0 - ty)
        + pick(x0 + 1.0, y0) * tx * (1.0 - ty)
        + pick(x0, y0 + 1.0) * (1.0 - tx) * ty
        + pick(x0 + 1.0, y0 + 1.0) * tx * ty;
    v.round().clamp(0.0, 255.0) as u8
}

/// The rotation attack: rotate by theta, then by -theta. The resampling
/// loss is the attack; right-angle rotations permute the pixel lattice
/// exactly and are lossless under nearest-neighbor.
pub fn rotate_roundtrip(img: &GrayImage, theta_deg: f64, resampling: Resampling) -> GrayImage {
    let once = rotate(img, theta_deg, resampling);
    rotate(&once, -theta_deg, resampling)
}

/// Adds per-pixel independent Gaussian noise (Box-Muller over a seeded
/// XORshift uniform), rounds, and clamps to [0, 255].
pub fn gaussian_noise(img: &GrayImage, sigma: f64, seed: u64) -> Result<GrayImage, AttackError> {
    if sigma < 0.0 {
        return Err(AttackError::NegativeSigma(sigma));
    }
    let mut out = img.clone();
    if sigma == 0.0 {
        return Ok(out);
    }
    let mut gauss = GaussianSource::new(seed);
    for p in out.pixels_mut() {
        let noisy = *p as f64 + sigma * gauss.next_standard();
        *p = noisy.round().clamp(0.0, 255.0) as u8;
    }
    Ok(out)
}

/// Standard normal deviates from Box-Muller pairs over XORshift uniforms.
pub(crate) struct GaussianSource {
    rng: XorShift32,
    spare: Option<f64>,
}

impl GaussianSource {
    pub(crate) fn new(seed: u64) -> Self {
        // Fold the 64-bit seed into the nonzero 32-bit XORshift state.
        let folded = (seed ^ (seed >> 32)) as u32;
        GaussianSource {
            rng: XorShift32::coerced(folded),
            spare: None,
        }
    }

    pub(crate) fn next_standard(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // u1 in (0, 1], u2 in [0, 1).
        let u1 = (self.rng.next_u32() as f64 + 1.0) / 4_294_967_296.0;
        let u2 = self.rng.next_u32() as f64 / 4_294_967_296.0;
        let r = (-2.0 * u1.ln()).sqrt();
        let (s, c) = (2.0 * std::f64::consts::PI * u2).sin_cos();
        self.spare = Some(r * s);
        r * c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gradient(w: u32, h: u32) -> GrayImage {
        let mut img = GrayImage::new(w, h).unwrap();
        for y in 0..h {
            for x in 0..w {
                img.set(x, y, ((x * 7 + y * 3) % 251) as u8);
            }
        }
        img
    }

    #[test]
    fn crop_identity_and_full() {
        let img = gradient(32, 32);
        assert_eq!(crop_zero(&img, 5, 5, 0, 0).unwrap(), img);
        let zeroed = crop_zero(&img, 0, 0, 32, 32).unwrap();
        assert!(zeroed.pixels().iter().all(|&p| p == 0));
    }

    #[test]
    fn crop_bounds_checked() {
        let img = gradient(32, 32);
        assert!(matches!(
            crop_zero(&img, 30, 0, 4, 4),
            Err(AttackError::CropOutOfBounds { .. })
        ));
        // Overflowing coordinates must not wrap.
        assert!(crop_zero(&img, u32::MAX, 0, 2, 2).is_err());
    }

    #[test]
    fn crop_zeroes_exactly_the_rectangle() {
        let img = gradient(16, 16);
        let out = crop_zero(&img, 4, 6, 3, 2).unwrap();
        for y in 0..16 {
            for x in 0..16 {
                let inside = (4..7).contains(&x) && (6..8).contains(&y);
                assert_eq!(out.get(x, y), if inside { 0 } else { img.get(x, y) });
            }
        }
    }

    #[test]
    fn rotate_zero_is_identity() {
        let img = gradient(64, 64);
        assert_eq!(rotate_roundtrip(&img, 0.0, Resampling::Nearest), img);
    }

    // Right angles permute the pixel lattice exactly on square images.
    #[test]
    fn rotate_90_roundtrip_exact() {
        let img = gradient(64, 64);
        assert_eq!(rotate_roundtrip(&img, 90.0, Resampling::Nearest), img);
        let once = rotate(&img, 90.0, Resampling::Nearest);
        assert_ne!(once, img);
        // Single 90-degree rotation maps (x, y) to a lattice point.
        for y in 0..64 {
            for x in 0..64 {
                assert_eq!(once.get(x, y), img.get(y, 63 - x), "({x},{y})");
            }
        }
    }

    #[test]
    fn rotate_preserves_dimensions() {
        let img = gradient(48, 20);
        let out = rotate_roundtrip(&img, 7.3, Resampling::Nearest);
        assert_eq!((out.width(), out.height()), (48, 20));
        let out = rotate_roundtrip(&img, 7.3, Resampling::Bilinear);
        assert_eq!((out.width(), out.height()), (48, 20));
    }

    #[test]
    fn rotate_small_angle_mostly_identity() {
        let img = gradient(256, 256);
        let out = rotate_roundtrip(&img, 2.0, Resampling::Nearest);
        let same = img
            .pixels()
            .iter()
            .zip(out.pixels())
            .filter(|(a, b)| a == b)
            .count();
        assert!(
            same as f64 / img.pixels().len() as f64 > 0.80,
            "only {same} of {} pixels survive",
            img.pixels().len()
        );
    }

    #[test]
    fn noise_sigma_zero_identity() {
        let img = gradient(32, 32);
        assert_eq!(gaussian_noise(&img, 0.0, 42).unwrap(), img);
        assert!(gaussian_noise(&img, -1.0, 42).is_err());
    }

    #[test]
    fn noise_deterministic_per_seed() {
        let img = gradient(64, 64);
        let a = gaussian_noise(&img, 5.0, 7).unwrap();
        let b = gaussian_noise(&img, 5.0, 7).unwrap();
        let c = gaussian_noise(&img, 5.0, 8).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    // Sample statistics oracle: on a mid-gray image (no clamping at work)
    // the empirical deviation of out - in tracks sigma within 2%.
    #[test]
    fn noise_empirical_sigma() {
        let img = GrayImage::from_pixels(256, 256, vec![128; 65536]).unwrap();
        let sigma = 5.0;
        let noisy = gaussian_noise(&img, sigma, 1234).unwrap();
        let n = img.pixels().len() as f64;
        let mean: f64 = noisy
            .pixels()
            .iter()
            .zip(img.pixels())
            .map(|(&a, &b)| a as f64 - b as f64)
            .sum::<f64>()
            / n;
        let var: f64 = noisy
            .pixels()
            .iter()
            .zip(img.pixels())
            .map(|(&a, &b)| {
                let d = a as f64 - b as f64 - mean;
                d * d
            })
            .sum::<f64>()
            / (n - 1.0);
        // Rounding to integers adds 1/12 of quantization variance.
        let expected = (sigma * sigma + 1.0 / 12.0f64).sqrt();
        assert!(
            (var.sqrt() - expected).abs() / expected < 0.02,
            "sample sigma {} vs {expected}",
            var.sqrt()
        );
        assert!(mean.abs() < 0.1, "mean {mean}");
    }

    #[test]
    fn attack_specs_preserve_dimensions() {
        let img = gradient(40, 24);
        for spec in [
            AttackSpec::Crop { size: 10 },
            AttackSpec::Rotate { angle_deg: 5.0 },
            AttackSpec::Jpeg { level: 10 },
            AttackSpec::Gauss {
                sigma: 3.0,
                seed: 99,
            },
        ] {
            let out = spec.apply(&img).unwrap();
            assert_eq!((out.width(), out.height()), (40, 24), "{spec:?}");
        }
    }
}
