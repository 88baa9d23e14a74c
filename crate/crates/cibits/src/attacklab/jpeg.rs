//! JPEG-flavored degradation: 8x8 block DCT, quantization against the
//! standard luminance table scaled by the compression level, then inverse
//! transform. No entropy coding; the quantization loss is the attack.
//!
//! The level maps to a libjpeg-style quality factor Q = 100 / level, so
//! level 1 quantizes by an all-ones table (near lossless) and level 20
//! matches quality 5.

use super::AttackError;
use crate::imagery::GrayImage;

/// The standard luminance quantization table, row-major.
const LUMA_TABLE: [u16; 64] = [
    16, 11, 10, 16, 24, 40, 51, 61, //
    12, 12, 14, 19, 26, 58, 60, 55, //
    14, 13, 16, 24, 40, 57, 69, 56, //
    14, 17, 22, 29, 51, 87, 80, 62, //
    18, 22, 37, 56, 68, 109, 103, 77, //
    24, 35, 55, 64, 81, 104, 113, 92, //
    49, 64, 78, 87, 103, 121, 120, 101, //
    72, 92, 95, 98, 112, 100, 103, 99,
];

/// Scales the luminance table for a compression level in 1..=100.
fn quant_table(level: u32) -> [f64; 64] {
    let q = (100.0 / level as f64).round().clamp(1.0, 100.0);
    let scale = if q < 50.0 { 5000.0 / q } else { 200.0 - 2.0 * q };
    let mut out = [0.0; 64];
    for (o, &t) in out.iter_mut().zip(&LUMA_TABLE) {
        *o = ((t as f64 * scale + 50.0) / 100.0).floor().clamp(1.0, 255.0);
    }
    out
}

/// Applies the DCT / quantize / dequantize / inverse-DCT round trip to
/// every 8x8 block. Images whose sides are not multiples of 8 are edge-
/// padded for the transform and cropped back.
pub fn jpeg_like(img: &GrayImage, level: u32) -> Result<GrayImage, AttackError> {
    if !(1..=100).contains(&level) {
        return Err(AttackError::BadLevel(level));
    }
    let quant = quant_table(level);
    let (w, h) = (img.width() as usize, img.height() as usize);
    let (bw, bh) = (w.div_ceil(8), h.div_ceil(8));
    let mut out = img.clone();
    let mut block = [0.0f64; 64];
    for by in 0..bh {
        for bx in 0..bw {
            // Load with edge replication and the -128 level shift.
            for y in 0..8 {
                for x in 0..8 {
                    let sx = (bx * 8 + x).min(w - 1);
                    let sy = (by * 8 + y).min(h - 1);
                    block[y * 8 + x] = img.get(sx as u32, sy as u32) as f64 - 128.0;
                }
            }
            dct2_in_place(&mut block);
            for (c, &q) in block.iter_mut().zip(&quant) {
                *c = (*c / q).round() * q;
            }
            idct2_in_place(&mut block);
            for y in 0..8 {
                for x in 0..8 {
                    let (px, py) = (bx * 8 + x, by * 8 + y);
                    if px < w && py < h {
                        let v = (block[y * 8 + x] + 128.0).round().clamp(0.0, 255.0);
                        out.set(px as u32, py as u32, v as u8);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// cos((2x+1) u pi / 16) lookup, indexed [x][u].
fn cos_table() -> [[f64; 8]; 8] {
    let mut t = [[0.0; 8]; 8];
    for (x, row) in t.iter_mut().enumerate() {
        for (u, v) in row.iter_mut().enumerate() {
            *v = ((2 * x + 1) as f64 * u as f64 * std::f64::consts::PI / 16.0).cos();
        }
    }
    t
}

fn alpha(u: usize) -> f64 {
    if u == 0 {
        std::f64::consts::FRAC_1_SQRT_2
    } else {
        1.0
    }
}

/// Separable 2D DCT-II with orthonormal JPEG scaling.
fn dct2_in_place(block: &mut [f64; 64]) {
    let cos = cos_table();
    let mut tmp = [0.0f64; 64];
    // Rows.
    for y in 0..8 {
        for u in 0..8 {
            let mut acc = 0.0;
            for x in 0..8 {
                acc += block[y * 8 + x] * cos[x][u];
            }
            tmp[y * 8 + u] = acc * alpha(u) / 2.0;
        }
    }
    // Columns.
    for u in 0..8 {
        for v in 0..8 {
            let mut acc = 0.0;
            for y in 0..8 {
                acc += tmp[y * 8 + u] * cos[y][v];
            }
            block[v * 8 + u] = acc * alpha(v) / 2.0;
        }
    }
}

/// Inverse of [`dct2_in_place`].
fn idct2_in_place(block: &mut [f64; 64]) {
    let cos = cos_table();
    let mut tmp = [0.0f64; 64];
    // Columns.
    for u in 0..8 {
        for y in 0..8 {
            let mut acc = 0.0;
            for v in 0..8 {
                acc += alpha(v) / 2.0 * block[v * 8 + u] * cos[y][v];
            }
            tmp[y * 8 + u] = acc;
        }
    }
    // Rows.
    for y in 0..8 {
        for x in 0..8 {
            let mut acc = 0.0;
            for u in 0..8 {
                acc += alpha(u) / 2.0 * tmp[y * 8 + u] * cos[x][u];
            }
            block[y * 8 + x] = acc;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imagery::GrayImage;

    fn noisy_image(w: u32, h: u32) -> GrayImage {
        let mut z = 0xC0FF_EE11u32;
        let pixels = (0..w as usize * h as usize)
            .map(|_| {
                z ^= z << 13;
                z ^= z >> 17;
                z ^= z << 5;
                z as u8
            })
            .collect();
        GrayImage::from_pixels(w, h, pixels).unwrap()
    }

    #[test]
    fn level_bounds() {
        let img = noisy_image(8, 8);
        assert!(jpeg_like(&img, 0).is_err());
        assert!(jpeg_like(&img, 101).is_err());
        assert!(jpeg_like(&img, 1).is_ok());
        assert!(jpeg_like(&img, 100).is_ok());
    }

    #[test]
    fn level_one_table_is_all_ones() {
        assert!(quant_table(1).iter().all(|&q| q == 1.0));
    }

    #[test]
    fn dct_roundtrip_without_quantization() {
        let mut block = [0.0f64; 64];
        for (i, b) in block.iter_mut().enumerate() {
            *b = ((i * 37 + 11) % 256) as f64 - 128.0;
        }
        let original = block;
        dct2_in_place(&mut block);
        idct2_in_place(&mut block);
        for (a, b) in original.iter().zip(&block) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    // With an all-ones quantizer the only loss is coefficient rounding:
    // at most one gray level per pixel.
    #[test]
    fn near_lossless_at_level_one() {
        for img in [noisy_image(256, 256), noisy_image(40, 24)] {
            let out = jpeg_like(&img, 1).unwrap();
            let max_delta = img
                .pixels()
                .iter()
                .zip(out.pixels())
                .map(|(&a, &b)| (a as i16 - b as i16).unsigned_abs())
                .max()
                .unwrap();
            assert!(max_delta <= 1, "max delta {max_delta}");
        }
    }

    #[test]
    fn constant_image_stays_constant() {
        for level in [1, 2, 10, 20] {
            for value in [0u8, 77, 128, 255] {
                let img = GrayImage::from_pixels(16, 16, vec![value; 256]).unwrap();
                let out = jpeg_like(&img, level).unwrap();
                let first = out.pixels()[0];
                assert!(out.pixels().iter().all(|&p| p == first), "level {level}");
                if level == 1 {
                    assert_eq!(first, value);
                }
            }
        }
    }

    #[test]
    fn deterministic_and_monotone_degradation() {
        let img = noisy_image(128, 128);
        assert_eq!(jpeg_like(&img, 10).unwrap(), jpeg_like(&img, 10).unwrap());
        let err_at = |level: u32| -> u64 {
            jpeg_like(&img, level)
                .unwrap()
                .pixels()
                .iter()
                .zip(img.pixels())
                .map(|(&a, &b)| (a as i64 - b as i64).unsigned_abs())
                .sum()
        };
        let (e2, e20) = (err_at(2), err_at(20));
        assert!(e2 < e20, "level 2 should distort less than level 20: {e2} vs {e20}");
    }
}
