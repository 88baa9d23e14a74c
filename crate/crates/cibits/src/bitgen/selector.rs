//! Binomially weighted selector mapping a uniform 32-bit draw to the
//! number m of bits to flip in one round.
//!
//! For an N-bit state the draw y selects m = k with probability
//! C(N,k)/2^N, so that the N-bit outputs themselves are uniform. The
//! interval test `y/2^32 < sum_{i<=k} C(N,i)/2^N` is evaluated in exact
//! integer arithmetic by cross-multiplication; no floating point is
//! involved, so the thresholds are bit-exact for every N up to 64.

use super::GenError;

/// Which ladder the selector walks: `G1` counts up from 0, `G2` is its
/// mirror, returning N minus the `G1` value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorKind {
    G1,
    G2,
}

/// Precomputed cumulative binomial numerators for one state width.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Selector {
    kind: SelectorKind,
    n_bits: u32,
    /// cum[k] = sum_{i=0..=k} C(N,i); cum[N] = 2^N exactly.
    cum: Vec<u128>,
}

impl Selector {
    pub fn new(kind: SelectorKind, n_bits: u32) -> Result<Self, GenError> {
        if !(2..=64).contains(&n_bits) {
            return Err(GenError::InvalidParam(format!(
                "selector width must be in 2..=64, got {n_bits}"
            )));
        }
        let mut cum = Vec::with_capacity(n_bits as usize + 1);
        let mut c: u128 = 1; // C(N, 0)
        let mut sum: u128 = 0;
        for k in 0..=n_bits as u128 {
            sum += c;
            cum.push(sum);
            // C(N, k+1) = C(N, k) * (N - k) / (k + 1), exact at every step.
            c = c * (n_bits as u128 - k) / (k + 1);
        }
        debug_assert_eq!(sum, 1u128 << n_bits);
        Ok(Selector { kind, n_bits, cum })
    }

    pub fn kind(&self) -> SelectorKind {
        self.kind
    }

    pub fn n_bits(&self) -> u32 {
        self.n_bits
    }

    /// Maps a uniform draw to m in [0, N]. G1 finds the unique k with
    /// cum[k-1]/2^N <= y/2^32 < cum[k]/2^N; G2 reverses the ladder.
    pub fn select(&self, y: u32) -> u32 {
        let lhs = (y as u128) << self.n_bits;
        let k = self.cum.partition_point(|&c| (c << 32) <= lhs) as u32;
        match self.kind {
            SelectorKind::G1 => k,
            SelectorKind::G2 => self.n_bits - k,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_width() {
        assert!(Selector::new(SelectorKind::G1, 1).is_err());
        assert!(Selector::new(SelectorKind::G1, 65).is_err());
        assert!(Selector::new(SelectorKind::G1, 2).is_ok());
        assert!(Selector::new(SelectorKind::G1, 64).is_ok());
    }

    #[test]
    fn thresholds_n4() {
        let s = Selector::new(SelectorKind::G1, 4).unwrap();
        // 1, 1+4, 1+4+6, 1+4+6+4, 16
        assert_eq!(s.cum, vec![1, 5, 11, 15, 16]);
    }

    #[test]
    fn thresholds_strictly_increasing_all_widths() {
        for n in 2..=64 {
            let s = Selector::new(SelectorKind::G1, n).unwrap();
            assert!(s.cum.windows(2).all(|w| w[0] < w[1]), "N = {n}");
            assert_eq!(*s.cum.last().unwrap(), 1u128 << n, "N = {n}");
        }
    }

    // The N=4 worked ladder: y/2^32 in [0,1/16) -> 0; 1/2 in [5/16,11/16)
    // -> 2; the top of the range -> 4, mirrored to 0 by g2.
    #[test]
    fn worked_ladder_n4() {
        let g1 = Selector::new(SelectorKind::G1, 4).unwrap();
        let g2 = Selector::new(SelectorKind::G2, 4).unwrap();
        assert_eq!(g1.select(0), 0);
        assert_eq!(g1.select(1u32 << 31), 2);
        assert_eq!(g1.select(u32::MAX), 4);
        assert_eq!(g2.select(u32::MAX), 0);
    }

    #[test]
    fn boundaries_exact_n4() {
        let g1 = Selector::new(SelectorKind::G1, 4).unwrap();
        // Interval edges at cum/16 * 2^32: 1/16 -> 0x1000_0000, etc.
        assert_eq!(g1.select(0x0FFF_FFFF), 0);
        assert_eq!(g1.select(0x1000_0000), 1);
        assert_eq!(g1.select(0x4FFF_FFFF), 1);
        assert_eq!(g1.select(0x5000_0000), 2);
        assert_eq!(g1.select(0xAFFF_FFFF), 2);
        assert_eq!(g1.select(0xB000_0000), 3);
        assert_eq!(g1.select(0xEFFF_FFFF), 3);
        assert_eq!(g1.select(0xF000_0000), 4);
    }

    #[test]
    fn g2_mirrors_g1_across_widths() {
        for n in [2u32, 3, 4, 7, 31, 32, 33, 63, 64] {
            let g1 = Selector::new(SelectorKind::G1, n).unwrap();
            let g2 = Selector::new(SelectorKind::G2, n).unwrap();
            let mut y = 0x9E3779B9u32;
            for _ in 0..2000 {
                y = y.wrapping_mul(1664525).wrapping_add(1013904223);
                assert_eq!(g2.select(y), n - g1.select(y), "N = {n}, y = {y}");
            }
            for y in [0, 1, u32::MAX, u32::MAX - 1, 1 << 31] {
                assert_eq!(g2.select(y), n - g1.select(y));
            }
        }
    }
}
