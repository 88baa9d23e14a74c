//! Built-in deterministic test images: a smooth grayscale carrier with
//! non-trivial structure in every bit plane, and a bold bilevel mark.
//! Used by the experiment commands when no files are supplied.

use cibits::bitgen::XorShift32;
use cibits::imagery::{BitImage, GrayImage};

/// Smooth test carrier: two gaussian highlights over a diagonal gradient,
/// plus faint deterministic texture so the low planes are not constant.
pub fn carrier(width: u32, height: u32) -> GrayImage {
    let mut img = GrayImage::new(width, height).expect("positive dims");
    let mut rng = XorShift32::coerced(0x51E_CA57);
    let (w, h) = (width as f64, height as f64);
    for y in 0..height {
        for x in 0..width {
            let fx = x as f64 / w;
            let fy = y as f64 / h;
            let d1 = (fx - 0.38).powi(2) + (fy - 0.31).powi(2);
            let d2 = (fx - 0.70).powi(2) + (fy - 0.74).powi(2);
            let base = 58.0 + 95.0 * fx + 55.0 * fy + 88.0 * (-d1 / 0.035).exp()
                - 60.0 * (-d2 / 0.060).exp();
            let texture = (rng.next_u32() % 5) as f64 - 2.0;
            img.set(x, y, (base + texture).round().clamp(0.0, 255.0) as u8);
        }
    }
    img
}

/// Bold bilevel mark: border frame, diagonal stripes, and a filled box.
pub fn watermark(side: u32) -> BitImage {
    let mut img = BitImage::new(side, side).expect("positive dims");
    let s = side as i64;
    for y in 0..side {
        for x in 0..side {
            let (ix, iy) = (x as i64, y as i64);
            let border = ix < s / 16 || iy < s / 16 || ix >= s - s / 16 || iy >= s - s / 16;
            let stripes = ((ix + iy) / (s / 8).max(1)) % 2 == 0;
            let boxed = (s / 3..2 * s / 3).contains(&ix) && (s / 3..2 * s / 3).contains(&iy);
            img.set(x, y, border || (stripes && !boxed));
        }
    }
    img
}
