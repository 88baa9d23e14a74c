//! Packed bit sequences, the common currency between generators, tests,
//! and watermark payloads.

use std::fmt;

/// A finite sequence of bits, packed 64 per word, MSB-first within each
/// word. Bit `i` of the sequence lives at bit `63 - (i % 64)` of word
/// `i / 64`; unused tail bits of the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSeq {
    words: Vec<u64>,
    len: usize,
}

impl BitSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitSeq {
            words: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    /// All-zero sequence of the given length.
    pub fn zeros(len: usize) -> Self {
        BitSeq {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut s = BitSeq::with_capacity(bits.len());
        for &b in bits {
            s.push(b);
        }
        s
    }

    /// Parses a string of '0'/'1' characters; whitespace is skipped.
    pub fn from_binary_str(text: &str) -> Option<Self> {
        let mut s = BitSeq::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => s.push(false),
                '1' => s.push(true),
                c if c.is_whitespace() => {}
                _ => return None,
            }
        }
        Some(s)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn push(&mut self, bit: bool) {
        let (word, shift) = (self.len / 64, 63 - (self.len % 64));
        if word == self.words.len() {
            self.words.push(0);
        }
        if bit {
            self.words[word] |= 1 << shift;
        }
        self.len += 1;
    }

    /// Appends the low `count` bits of `value`, most significant first.
    pub fn push_bits_msb(&mut self, value: u64, count: u32) {
        debug_assert!(count <= 64);
        for j in (0..count).rev() {
            self.push((value >> j) & 1 == 1);
        }
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / 64] >> (63 - (index % 64))) & 1 == 1
    }

    pub fn set(&mut self, index: usize, bit: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (63 - (index % 64));
        if bit {
            self.words[index / 64] |= mask;
        } else {
            self.words[index / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / 64] ^= 1 << (63 - (index % 64));
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    /// Number of positions where `self` and `other` differ. Both sequences
    /// must have the same length; the packed tails are zero on both sides,
    /// so a word-wise XOR popcount is exact.
    pub fn xor_count(&self, other: &BitSeq) -> Option<usize> {
        if self.len != other.len {
            return None;
        }
        Some(
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| (a ^ b).count_ones() as usize)
                .sum(),
        )
    }

    pub fn complement(&self) -> BitSeq {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    /// First `len` bits as a new sequence.
    pub fn prefix(&self, len: usize) -> BitSeq {
        assert!(len <= self.len);
        let mut out = self.clone();
        out.len = len;
        out.words.truncate(len.div_ceil(64));
        out.clear_tail();
        out
    }

    /// The packed words, MSB-first. The tail beyond `len()` is zero.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Packs into bytes, MSB-first within each byte; the last byte is
    /// zero-padded.
    pub fn to_bytes_msb(&self) -> Vec<u8> {
        let n_bytes = self.len.div_ceil(8);
        let mut out = Vec::with_capacity(n_bytes);
        for i in 0..n_bytes {
            let word = self.words[i / 8];
            out.push((word >> (56 - 8 * (i % 8))) as u8);
        }
        out
    }

    fn clear_tail(&mut self) {
        let tail = self.len % 64;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= !0u64 << (64 - tail);
            }
        }
    }
}

impl fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitSeq[{}]", self.len)?;
        if self.len <= 128 {
            write!(f, " ")?;
            for b in self.iter() {
                write!(f, "{}", if b { '1' } else { '0' })?;
            }
        }
        Ok(())
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut s = BitSeq::new();
        for b in iter {
            s.push(b);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn push_get_roundtrip() {
        let mut s = BitSeq::new();
        for i in 0..200 {
            s.push(i % 3 == 0);
        }
        assert_eq!(s.len(), 200);
        for i in 0..200 {
            assert_eq!(s.get(i), i % 3 == 0, "bit {i}");
        }
    }

    #[test]
    fn push_bits_msb_order() {
        let mut s = BitSeq::new();
        s.push_bits_msb(0b0100, 4);
        assert_eq!(format!("{s:?}"), "BitSeq[4] 0100");
    }

    #[test]
    fn count_and_xor() {
        let a = BitSeq::from_binary_str("0100").unwrap();
        let b = BitSeq::from_binary_str("1011").unwrap();
        assert_eq!(a.count_ones(), 1);
        assert_eq!(a.xor_count(&b), Some(4));
        assert_eq!(a.xor_count(&a), Some(0));
        assert_eq!(a.complement(), b);
    }

    #[test]
    fn xor_count_length_mismatch() {
        let a = BitSeq::zeros(5);
        let b = BitSeq::zeros(6);
        assert_eq!(a.xor_count(&b), None);
    }

    #[test]
    fn complement_keeps_tail_clear() {
        let s = BitSeq::zeros(70);
        let c = s.complement();
        assert_eq!(c.count_ones(), 70);
        assert_eq!(c.words()[1] & ((1u64 << 58) - 1), 0);
    }

    #[test]
    fn bytes_msb_first() {
        let s = BitSeq::from_binary_str("0100101110000001").unwrap();
        assert_eq!(s.to_bytes_msb(), vec![0b01001011, 0b10000001]);
        let t = BitSeq::from_binary_str("110").unwrap();
        assert_eq!(t.to_bytes_msb(), vec![0b11000000]);
    }

    #[test]
    fn prefix_truncates() {
        let s = BitSeq::from_binary_str("11111111").unwrap();
        let p = s.prefix(3);
        assert_eq!(p.len(), 3);
        assert_eq!(p.count_ones(), 3);
    }
}
