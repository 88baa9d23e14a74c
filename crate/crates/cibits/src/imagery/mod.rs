//! Grayscale and bilevel image values, bit-plane access, and the binary
//! Netpbm codecs.

mod pnm;

pub use pnm::{read_pbm, read_pgm, write_pbm, write_pgm, PnmError};

use crate::bits::BitSeq;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ImageError {
    #[error("pixel buffer holds {got} bytes, expected {expected} for {width}x{height}")]
    PixelCount {
        width: u32,
        height: u32,
        expected: usize,
        got: usize,
    },
    #[error("bit plane data holds {got} bits, expected {expected}")]
    PlaneLength { expected: usize, got: usize },
    #[error("plane masks overlap: a bit cannot be both MSC and LSC (msc={msc:#010b}, lsc={lsc:#010b})")]
    OverlappingPlanes { msc: u8, lsc: u8 },
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyImage { width: u32, height: u32 },
}

/// 8-bit grayscale raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: u32, height: u32) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::EmptyImage { width, height });
        }
        Ok(GrayImage {
            width,
            height,
            pixels: vec![0; width as usize * height as usize],
        })
    }

    pub fn from_pixels(width: u32, height: u32, pixels: Vec<u8>) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::EmptyImage { width, height });
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(ImageError::PixelCount {
                width,
                height,
                expected,
                got: pixels.len(),
            });
        }
        Ok(GrayImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [u8] {
        &mut self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> u8 {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    pub fn set(&mut self, x: u32, y: u32, v: u8) {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[y as usize * self.width as usize + x as usize] = v;
    }
}

/// Bilevel raster, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitImage {
    width: u32,
    height: u32,
    bits: BitSeq,
}

impl BitImage {
    pub fn new(width: u32, height: u32) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::EmptyImage { width, height });
        }
        Ok(BitImage {
            width,
            height,
            bits: BitSeq::zeros(width as usize * height as usize),
        })
    }

    pub fn from_bits(width: u32, height: u32, bits: BitSeq) -> Result<Self, ImageError> {
        if width == 0 || height == 0 {
            return Err(ImageError::EmptyImage { width, height });
        }
        let expected = width as usize * height as usize;
        if bits.len() != expected {
            return Err(ImageError::PlaneLength {
                expected,
                got: bits.len(),
            });
        }
        Ok(BitImage {
            width,
            height,
            bits,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn bits(&self) -> &BitSeq {
        &self.bits
    }

    pub fn bits_mut(&mut self) -> &mut BitSeq {
        &mut self.bits
    }

    pub fn get(&self, x: u32, y: u32) -> bool {
        debug_assert!(x < self.width && y < self.height);
        self.bits.get(y as usize * self.width as usize + x as usize)
    }

    pub fn set(&mut self, x: u32, y: u32, v: bool) {
        debug_assert!(x < self.width && y < self.height);
        self.bits
            .set(y as usize * self.width as usize + x as usize, v);
    }
}

/// Which pixel bits carry the most significant coefficients (MSC,
/// authentication) and which the least significant ones (LSC, payload).
/// The two sets never overlap: an altered LSC must not disturb the MSC
/// needed to rebuild the strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BitPlaneSpec {
    msc: u8,
    lsc: u8,
}

impl BitPlaneSpec {
    /// MSC = bits {7,6,5,4}, LSC = bits {2,1,0}; bit 3 stays untouched.
    pub const DEFAULT: BitPlaneSpec = BitPlaneSpec {
        msc: 0b1111_0000,
        lsc: 0b0000_0111,
    };

    pub fn new(msc: u8, lsc: u8) -> Result<Self, ImageError> {
        if msc & lsc != 0 {
            return Err(ImageError::OverlappingPlanes { msc, lsc });
        }
        Ok(BitPlaneSpec { msc, lsc })
    }

    pub fn msc_mask(&self) -> u8 {
        self.msc
    }

    pub fn lsc_mask(&self) -> u8 {
        self.lsc
    }

    /// Number of LSC bits in a whole image.
    pub fn lsc_capacity(&self, img: &GrayImage) -> usize {
        self.lsc.count_ones() as usize * img.width as usize * img.height as usize
    }
}

impl Default for BitPlaneSpec {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Serializes the selected bit indices of every pixel: pixel-major, and
/// highest index first within each pixel.
pub fn extract_plane(img: &GrayImage, mask: u8) -> BitSeq {
    let per_pixel = mask.count_ones() as usize;
    let mut out = BitSeq::with_capacity(per_pixel * img.pixels.len());
    for &p in &img.pixels {
        for bit in (0..8).rev() {
            if mask & (1 << bit) != 0 {
                out.push(p & (1 << bit) != 0);
            }
        }
    }
    out
}

/// Exact inverse of [`extract_plane`] on the selected plane: writes `data`
/// back into the selected bit indices, leaving every other bit untouched.
pub fn replace_plane(img: &GrayImage, mask: u8, data: &BitSeq) -> Result<GrayImage, ImageError> {
    let per_pixel = mask.count_ones() as usize;
    let expected = per_pixel * img.pixels.len();
    if data.len() != expected {
        return Err(ImageError::PlaneLength {
            expected,
            got: data.len(),
        });
    }
    let mut out = img.clone();
    let mut i = 0;
    for p in &mut out.pixels {
        for bit in (0..8).rev() {
            if mask & (1 << bit) != 0 {
                if data.get(i) {
                    *p |= 1 << bit;
                } else {
                    *p &= !(1 << bit);
                }
                i += 1;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_image() -> GrayImage {
        let mut z = 0x9E3779B9u32;
        let pixels: Vec<u8> = (0..64 * 48)
            .map(|_| {
                z ^= z << 13;
                z ^= z >> 17;
                z ^= z << 5;
                z as u8
            })
            .collect();
        GrayImage::from_pixels(64, 48, pixels).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(GrayImage::new(0, 5).is_err());
        assert!(GrayImage::from_pixels(4, 4, vec![0; 15]).is_err());
        assert!(BitImage::from_bits(4, 4, BitSeq::zeros(16)).is_ok());
        assert!(BitImage::from_bits(4, 4, BitSeq::zeros(17)).is_err());
    }

    #[test]
    fn plane_spec_disjointness() {
        assert!(BitPlaneSpec::new(0b1111_0000, 0b0000_0111).is_ok());
        assert!(BitPlaneSpec::new(0b1111_1000, 0b0000_1111).is_err());
        let d = BitPlaneSpec::default();
        assert_eq!(d.msc_mask(), 0xF0);
        assert_eq!(d.lsc_mask(), 0x07);
    }

    // 0b10110101 with lsc {2,1,0} reads 1,0,1 highest-first.
    #[test]
    fn extract_single_pixel_order() {
        let img = GrayImage::from_pixels(1, 1, vec![0b1011_0101]).unwrap();
        let bits = extract_plane(&img, 0b0000_0111);
        assert_eq!(format!("{bits:?}"), "BitSeq[3] 101");
        let msc = extract_plane(&img, 0b1111_0000);
        assert_eq!(format!("{msc:?}"), "BitSeq[4] 1011");
    }

    // The three low bits of a 256x256 image give 3 * 65536 = 196608 bits.
    #[test]
    fn lsc_capacity_canonical() {
        let img = GrayImage::new(256, 256).unwrap();
        let spec = BitPlaneSpec::default();
        assert_eq!(spec.lsc_capacity(&img), 196_608);
        assert_eq!(extract_plane(&img, spec.lsc_mask()).len(), 196_608);
    }

    #[test]
    fn replace_extract_inverse_pair() {
        let img = test_image();
        let mask = 0b0000_0111;
        let plane = extract_plane(&img, mask);
        // replace(extract(img)) = img
        assert_eq!(replace_plane(&img, mask, &plane).unwrap(), img);
        // extract(replace(img, data)) = data, and other bits untouched
        let data: BitSeq = (0..plane.len()).map(|i| i % 7 < 3).collect();
        let replaced = replace_plane(&img, mask, &data).unwrap();
        assert_eq!(extract_plane(&replaced, mask), data);
        assert_eq!(
            extract_plane(&replaced, !mask),
            extract_plane(&img, !mask)
        );
    }

    #[test]
    fn replace_length_checked() {
        let img = test_image();
        assert!(matches!(
            replace_plane(&img, 0b111, &BitSeq::zeros(10)),
            Err(ImageError::PlaneLength { .. })
        ));
    }
}
