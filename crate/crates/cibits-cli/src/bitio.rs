//! Bit-file formats. ASCII writes '0'/'1' characters wrapped with a
//! newline every 64 bits; packed writes whole bytes MSB-first with a
//! zero-padded tail. Both are documented bit-exactly for interop.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use cibits::BitSeq;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BitFormat {
    #[default]
    Ascii,
    Packed,
}

pub fn write_bits(path: &Path, bits: &BitSeq, format: BitFormat) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    match format {
        BitFormat::Ascii => write_ascii(&mut w, bits),
        BitFormat::Packed => w.write_all(&bits.to_bytes_msb()),
    }
    .with_context(|| format!("writing {}", path.display()))?;
    w.flush().with_context(|| format!("flushing {}", path.display()))
}

pub fn write_ascii<W: Write>(w: &mut W, bits: &BitSeq) -> std::io::Result<()> {
    let mut line = [0u8; 65];
    let mut col = 0;
    for b in bits.iter() {
        line[col] = if b { b'1' } else { b'0' };
        col += 1;
        if col == 64 {
            line[64] = b'\n';
            w.write_all(&line)?;
            col = 0;
        }
    }
    if col > 0 {
        line[col] = b'\n';
        w.write_all(&line[..=col])?;
    }
    Ok(())
}

/// The single-stream export format: raw '0'/'1' characters, no wrapping,
/// so the file length equals the bit count.
pub fn write_ascii_stream<W: Write>(w: &mut W, bits: &BitSeq) -> std::io::Result<()> {
    let mut buf = Vec::with_capacity(8192);
    for b in bits.iter() {
        buf.push(if b { b'1' } else { b'0' });
        if buf.len() == 8192 {
            w.write_all(&buf)?;
            buf.clear();
        }
    }
    w.write_all(&buf)
}

pub fn read_bits(path: &Path, format: BitFormat) -> Result<BitSeq> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let mut data = Vec::new();
    BufReader::new(file)
        .read_to_end(&mut data)
        .with_context(|| format!("reading {}", path.display()))?;
    match format {
        BitFormat::Ascii => {
            let mut bits = BitSeq::with_capacity(data.len());
            for (i, &b) in data.iter().enumerate() {
                match b {
                    b'0' => bits.push(false),
                    b'1' => bits.push(true),
                    b if b.is_ascii_whitespace() => {}
                    other => bail!(
                        "{}: invalid character {:?} at byte {i}",
                        path.display(),
                        other as char
                    ),
                }
            }
            Ok(bits)
        }
        BitFormat::Packed => {
            let mut bits = BitSeq::with_capacity(data.len() * 8);
            for &byte in &data {
                bits.push_bits_msb(byte as u64, 8);
            }
            Ok(bits)
        }
    }
}
