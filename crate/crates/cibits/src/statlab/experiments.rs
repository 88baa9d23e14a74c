//! Generator-facing experiments: balance, key sensitivity, and the
//! histogram / adjacent-pair intensity data behind the density figures.

use std::collections::BTreeMap;

use super::TestError;
use crate::bitgen::{NewCi, NewCiParams};
use crate::bits::BitSeq;

/// Number of differing positions between two equal-length sequences.
pub fn hamming(a: &BitSeq, b: &BitSeq) -> Result<usize, TestError> {
    a.xor_count(b).ok_or(TestError::LengthMismatch {
        a: a.len(),
        b: b.len(),
    })
}

/// Runs `num_seqs` independently seeded generators for `seq_len` bits each
/// and returns |#ones - #zeros| / seq_len as a percentage, in run order.
/// The factory receives the run index and decides the seeds (and whether
/// decimation is enabled).
pub fn balance_experiment<F>(
    mut factory: F,
    num_seqs: usize,
    seq_len: usize,
) -> Result<Vec<f64>, TestError>
where
    F: FnMut(usize) -> NewCi,
{
    assert!(num_seqs > 0 && seq_len > 0);
    let mut out = Vec::with_capacity(num_seqs);
    for run in 0..num_seqs {
        let mut gen = factory(run);
        let bits = gen.bits(seq_len)?;
        let ones = bits.count_ones() as f64;
        let zeros = (seq_len - bits.count_ones()) as f64;
        out.push((ones - zeros).abs() / seq_len as f64 * 100.0);
    }
    Ok(out)
}

/// Variance ratio P = H/n between the stream from `params` and the stream
/// from the same parameters with one seed bit flipped. Bit indices walk
/// x0 first (0..N), then y0 (N..N+32), then y0b (N+32..N+64); flips into
/// the XORshift seeds are coerced away from zero.
pub fn key_sensitivity(
    params: &NewCiParams,
    flipped_bit: u32,
    seq_len: usize,
) -> Result<f64, TestError> {
    let flipped = flip_seed_bit(params, flipped_bit);
    let mut a = NewCi::from_params(params)?;
    let mut b = NewCi::from_params(&flipped)?;
    let h = hamming(&a.bits(seq_len)?, &b.bits(seq_len)?)?;
    Ok(h as f64 / seq_len as f64)
}

/// One-bit perturbation of the seed tuple.
pub fn flip_seed_bit(params: &NewCiParams, flipped_bit: u32) -> NewCiParams {
    let n = params.n_bits;
    assert!(flipped_bit < n + 64, "seed bit index out of range");
    let mut p = *params;
    if flipped_bit < n {
        p.x0 ^= 1 << flipped_bit;
    } else if flipped_bit < n + 32 {
        p.y0 ^= 1 << (flipped_bit - n);
        if p.y0 == 0 {
            p.y0 = 1;
        }
    } else {
        p.y0b ^= 1 << (flipped_bit - n - 32);
        if p.y0b == 0 {
            p.y0b = 1;
        }
    }
    p
}

/// Histogram of state values plus counts of adjacent output pairs.
/// The pair matrix is sparse: absent cells are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairIntensity {
    pub n_bits: u32,
    /// histogram[v] = occurrences of state v, 2^N bins.
    pub histogram: Vec<u64>,
    /// Counts of (x^i, x^{i+1}) pairs, keyed (current, next).
    pub pairs: BTreeMap<(u32, u32), u64>,
}

impl PairIntensity {
    pub fn total_pairs(&self) -> u64 {
        self.pairs.values().sum()
    }
}

/// Tallies state values and adjacent pairs of a state stream. Widths
/// above 16 bits are rejected (the histogram alone would need 2^N bins).
pub fn pair_intensity(states: &[u64], n_bits: u32) -> Result<PairIntensity, TestError> {
    if n_bits > 16 {
        return Err(TestError::WidthTooLarge { n_bits });
    }
    let mut histogram = vec![0u64; 1 << n_bits];
    let mut pairs = BTreeMap::new();
    for &s in states {
        histogram[s as usize] += 1;
    }
    for w in states.windows(2) {
        *pairs.entry((w[0] as u32, w[1] as u32)).or_insert(0) += 1;
    }
    Ok(PairIntensity {
        n_bits,
        histogram,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitgen::SelectorRule;

    #[test]
    fn hamming_basics() {
        let a = BitSeq::from_binary_str("0100").unwrap();
        let b = BitSeq::from_binary_str("1011").unwrap();
        assert_eq!(hamming(&a, &a).unwrap(), 0);
        assert_eq!(hamming(&a, &b).unwrap(), 4);
        assert_eq!(hamming(&a, &a.complement()).unwrap(), 4);
        assert!(matches!(
            hamming(&a, &BitSeq::zeros(5)),
            Err(TestError::LengthMismatch { a: 4, b: 5 })
        ));
    }

    #[test]
    fn balance_extremes() {
        // A generator pinned at m = 0 emits its initial state forever.
        let all_ones = |_run: usize| NewCi::scripted(4, 0b1111, &[0; 25], &[], true).unwrap();
        let v = balance_experiment(all_ones, 3, 100).unwrap();
        assert_eq!(v, vec![100.0, 100.0, 100.0]);

        let balanced = |_run: usize| NewCi::scripted(4, 0b0101, &[0; 25], &[], true).unwrap();
        let v = balance_experiment(balanced, 1, 100).unwrap();
        assert_eq!(v, vec![0.0]);
    }

    #[test]
    fn identical_seeds_give_zero_ratio() {
        let p = NewCiParams::new(4, 0b0100, 484_088, 484_088 ^ 0x9E37_79B9);
        let mut a = NewCi::from_params(&p).unwrap();
        let mut b = NewCi::from_params(&p).unwrap();
        let h = hamming(&a.bits(10_000).unwrap(), &b.bits(10_000).unwrap()).unwrap();
        assert_eq!(h, 0);
    }

    #[test]
    fn p_is_a_fraction() {
        let p = NewCiParams::new(4, 0b0100, 7, 13);
        for bit in [0, 3, 4, 17, 36 + 31] {
            let r = key_sensitivity(&p, bit, 5_000).unwrap();
            assert!((0.0..=1.0).contains(&r), "bit {bit}: {r}");
        }
    }

    // Flipping a bit of x0 alone leaves both strategy streams identical,
    // so every output state differs in exactly that one position: P = 1/N
    // exactly when n is a multiple of N.
    #[test]
    fn x0_flip_gives_exactly_one_over_n() {
        for n_bits in [4u32, 8, 16] {
            let p = NewCiParams {
                n_bits,
                x0: 0b0101,
                y0: 0xABCD_EF01,
                y0b: 0x1234_5678,
                rule: SelectorRule::G1,
                decimate: true,
            };
            let r = key_sensitivity(&p, 2, (n_bits as usize) * 2_500).unwrap();
            assert!(
                (r - 1.0 / n_bits as f64).abs() < 1e-12,
                "N = {n_bits}: {r}"
            );
        }
    }

    #[test]
    fn pair_intensity_counts() {
        let states = [3u64, 3, 3, 5];
        let pi = pair_intensity(&states, 4).unwrap();
        assert_eq!(pi.histogram[3], 3);
        assert_eq!(pi.histogram[5], 1);
        assert_eq!(pi.histogram.iter().sum::<u64>(), 4);
        assert_eq!(pi.total_pairs(), 3);
        assert_eq!(pi.pairs[&(3, 3)], 2);
        assert_eq!(pi.pairs[&(3, 5)], 1);
        assert!(pair_intensity(&states, 17).is_err());
    }

    #[test]
    fn constant_stream_single_bin() {
        let states = vec![9u64; 50];
        let pi = pair_intensity(&states, 4).unwrap();
        assert_eq!(pi.histogram.iter().filter(|&&c| c > 0).count(), 1);
        assert_eq!(pi.pairs.len(), 1);
        assert_eq!(pi.total_pairs(), 49);
    }
}
