//! Binary Netpbm codecs: P5 (grayscale, maxval 255) and P4 (bilevel,
//! rows padded to whole bytes, MSB first, 1 = black).

use std::io::{self, Read, Write};

use super::{BitImage, GrayImage};
use crate::bits::BitSeq;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PnmError {
    #[error("bad magic: expected {expected}, got {got:?}")]
    BadMagic { expected: &'static str, got: String },
    #[error("malformed header: {0}")]
    Header(String),
    #[error("unsupported maxval {0}, only 255 is accepted")]
    Maxval(u32),
    #[error("payload truncated: expected {expected} bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("invalid dimensions {width}x{height}")]
    Dimensions { width: u32, height: u32 },
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn write_pgm<W: Write>(img: &GrayImage, mut w: W) -> io::Result<()> {
    write!(w, "P5\n{} {}\n255\n", img.width(), img.height())?;
    w.write_all(img.pixels())
}

pub fn read_pgm<R: Read>(mut r: R) -> Result<GrayImage, PnmError> {
    let mut data = Vec::new();
    r.read_to_end(&mut data)?;
    let mut cursor = Header::new(&data, "P5")?;
    let width = cursor.next_number("width")?;
    let height = cursor.next_number("height")?;
    let maxval = cursor.next_number("maxval")?;
    if maxval != 255 {
        return Err(PnmError::Maxval(maxval));
    }
    cursor.single_whitespace()?;
    if width == 0 || height == 0 {
        return Err(PnmError::Dimensions { width, height });
    }
    let expected = width as usize * height as usize;
    let payload = &data[cursor.pos..];
    if payload.len() < expected {
        return Err(PnmError::Truncated {
            expected,
            got: payload.len(),
        });
    }
    Ok(GrayImage::from_pixels(width, height, payload[..expected].to_vec()).expect("sized above"))
}

pub fn write_pbm<W: Write>(img: &BitImage, mut w: W) -> io::Result<()> {
    write!(w, "P4\n{} {}\n", img.width(), img.height())?;
    let row_bytes = (img.width() as usize).div_ceil(8);
    let mut row = vec![0u8; row_bytes];
    for y in 0..img.height() {
        row.fill(0);
        for x in 0..img.width() {
            if img.get(x, y) {
                row[x as usize / 8] |= 0x80 >> (x % 8);
            }
        }
        w.write_all(&row)?;
    }
    Ok(())
}

pub fn read_pbm<R: Read>(mut r: R) -> Result<BitImage, PnmError> {
    let mut data = Vec::new();
    r.read_to_end(&mut data)?;
    let mut cursor = Header::new(&data, "P4")?;
    let width = cursor.next_number("width")?;
    let height = cursor.next_number("height")?;
    cursor.single_whitespace()?;
    if width == 0 || height == 0 {
        return Err(PnmError::Dimensions { width, height });
    }
    let row_bytes = (width as usize).div_ceil(8);
    let expected = row_bytes * height as usize;
    let payload = &data[cursor.pos..];
    if payload.len() < expected {
        return Err(PnmError::Truncated {
            expected,
            got: payload.len(),
        });
    }
    let mut bits = BitSeq::with_capacity(width as usize * height as usize);
    for y in 0..height as usize {
        let row = &payload[y * row_bytes..(y + 1) * row_bytes];
        for x in 0..width as usize {
            bits.push(row[x / 8] & (0x80 >> (x % 8)) != 0);
        }
    }
    Ok(BitImage::from_bits(width, height, bits).expect("sized above"))
}

/// Minimal whitespace-delimited header scanner with `#` comment support.
struct Header<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Header<'a> {
    fn new(data: &'a [u8], magic: &'static str) -> Result<Self, PnmError> {
        if data.len() < 2 || &data[..2] != magic.as_bytes() {
            let got = String::from_utf8_lossy(&data[..data.len().min(2)]).into_owned();
            return Err(PnmError::BadMagic {
                expected: magic,
                got,
            });
        }
        Ok(Header { data, pos: 2 })
    }

    fn skip_space_and_comments(&mut self) -> Result<(), PnmError> {
        let mut progressed = false;
        loop {
            match self.data.get(self.pos) {
                Some(b) if b.is_ascii_whitespace() => {
                    self.pos += 1;
                    progressed = true;
                }
                Some(b'#') => {
                    while let Some(&b) = self.data.get(self.pos) {
                        self.pos += 1;
                        if b == b'\n' {
                            break;
                        }
                    }
                    progressed = true;
                }
                _ => break,
            }
        }
        if progressed {
            Ok(())
        } else {
            Err(PnmError::Header("missing whitespace separator".into()))
        }
    }

    fn next_number(&mut self, what: &str) -> Result<u32, PnmError> {
        self.skip_space_and_comments()?;
        let start = self.pos;
        while self
            .data
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(PnmError::Header(format!("expected {what} digits")));
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| PnmError::Header(format!("{what} out of range")))
    }

    /// Consumes exactly the single whitespace byte separating the header
    /// from the payload.
    fn single_whitespace(&mut self) -> Result<(), PnmError> {
        match self.data.get(self.pos) {
            Some(b) if b.is_ascii_whitespace() => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(PnmError::Header(
                "payload must follow a single whitespace byte".into(),
            )),
        }
    }
}
