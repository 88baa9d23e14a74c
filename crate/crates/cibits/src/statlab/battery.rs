//! The five comparison tests: monobit, serial, poker, runs, and
//! autocorrelation. Each returns a [`TestReport`] with the raw statistic,
//! the reference distribution, the p-value, and the verdict at the given
//! significance level.

use super::{TestError, TestReport};
use crate::bits::BitSeq;

/// Frequency test: X1 = (n0 - n1)^2 / n, chi-square with 1 dof.
pub fn monobit(s: &BitSeq, alpha: f64) -> Result<TestReport, TestError> {
    let n = s.len();
    if n < 1 {
        return Err(TestError::TooShort { needed: 1, got: n });
    }
    let n1 = s.count_ones() as f64;
    let n0 = n as f64 - n1;
    let x1 = (n0 - n1) * (n0 - n1) / n as f64;
    Ok(TestReport::from_chi2("monobit", x1, 1, alpha))
}

/// Serial (2-bit) test over overlapping pairs, chi-square with 2 dof.
/// Valid for n >= 21.
pub fn serial2(s: &BitSeq, alpha: f64) -> Result<TestReport, TestError> {
    let n = s.len();
    if n < 21 {
        return Err(TestError::TooShort { needed: 21, got: n });
    }
    let mut pair = [0u64; 4];
    let mut prev = s.get(0) as usize;
    for i in 1..n {
        let cur = s.get(i) as usize;
        pair[(prev << 1) | cur] += 1;
        prev = cur;
    }
    debug_assert_eq!(pair.iter().sum::<u64>() as usize, n - 1);
    let n1 = s.count_ones() as f64;
    let n0 = n as f64 - n1;
    let sq = |v: u64| (v as f64) * (v as f64);
    let x2 = 4.0 / (n as f64 - 1.0) * (sq(pair[0]) + sq(pair[1]) + sq(pair[2]) + sq(pair[3]))
        - 2.0 / n as f64 * (n0 * n0 + n1 * n1)
        + 1.0;
    // Nonnegative in exact arithmetic; cancellation can dip a hair below.
    let x2 = x2.max(0.0);
    Ok(TestReport::from_chi2("serial", x2, 2, alpha))
}

/// Poker test on non-overlapping m-bit blocks, chi-square with 2^m - 1
/// dof. Valid when floor(n/m) >= 5 * 2^m; the error names the minimal n.
pub fn poker(s: &BitSeq, m: u32, alpha: f64) -> Result<TestReport, TestError> {
    let n = s.len();
    assert!((1..=24).contains(&m), "poker block size out of range");
    let k = n / m as usize;
    let min_blocks = 5usize << m;
    if k < min_blocks {
        return Err(TestError::PokerBound {
            m,
            min_len: m as usize * min_blocks,
            got: n,
        });
    }
    let mut counts = vec![0u64; 1 << m];
    for block in 0..k {
        let mut v = 0usize;
        for j in 0..m as usize {
            v = (v << 1) | s.get(block * m as usize + j) as usize;
        }
        counts[v] += 1;
    }
    let sum_sq: f64 = counts.iter().map(|&c| (c as f64) * (c as f64)).sum();
    // Nonnegative in exact arithmetic; cancellation can dip a hair below.
    let x3 = ((1u64 << m) as f64 / k as f64 * sum_sq - k as f64).max(0.0);
    Ok(TestReport::from_chi2("poker", x3, (1 << m) - 1, alpha))
}

/// Expected number of gaps (or blocks) of length i in n random bits.
fn expected_runs(n: usize, i: u32) -> f64 {
    (n as f64 - i as f64 + 3.0) / 2f64.powi(i as i32 + 2)
}

/// Runs test: blocks and gaps of each length up to k, where k is the
/// largest i with e_i >= 5; longer runs are tallied into bucket k, whose
/// expectation is widened to the tail sum over i >= k so that observed
/// and expected category totals agree. Chi-square with 2k - 2 dof. Valid
/// for n >= 38 (e_1 >= 5).
pub fn runs(s: &BitSeq, alpha: f64) -> Result<TestReport, TestError> {
    let n = s.len();
    if n < 38 {
        return Err(TestError::TooShort { needed: 38, got: n });
    }
    let mut k = 1u32;
    while expected_runs(n, k + 1) >= 5.0 {
        k += 1;
    }
    let mut blocks = vec![0u64; k as usize]; // runs of ones
    let mut gaps = vec![0u64; k as usize]; // runs of zeros
    let mut tally = |bit: bool, len: usize| {
        let bucket = len.min(k as usize) - 1;
        if bit {
            blocks[bucket] += 1;
        } else {
            gaps[bucket] += 1;
        }
    };
    let mut run_bit = s.get(0);
    let mut run_len = 1usize;
    for i in 1..n {
        let bit = s.get(i);
        if bit == run_bit {
            run_len += 1;
        } else {
            tally(run_bit, run_len);
            run_bit = bit;
            run_len = 1;
        }
    }
    tally(run_bit, run_len);
    let mut x4 = 0.0;
    for i in 1..=k {
        let e = if i == k {
            expected_runs_tail(n, k)
        } else {
            expected_runs(n, i)
        };
        let b = blocks[i as usize - 1] as f64;
        let g = gaps[i as usize - 1] as f64;
        x4 += (b - e) * (b - e) / e + (g - e) * (g - e) / e;
    }
    // 38 <= n < 79 yields k = 1, where 2k - 2 degenerates to 0.
    let dof = (2 * k - 2).max(1);
    Ok(TestReport::from_chi2("runs", x4, dof, alpha))
}

/// Expected number of gaps (or blocks) of length >= k.
fn expected_runs_tail(n: usize, k: u32) -> f64 {
    let mut acc = 0.0;
    let mut i = k;
    loop {
        let e = expected_runs(n, i);
        if e <= 1e-12 {
            break;
        }
        acc += e;
        i += 1;
    }
    acc
}

/// Non-cyclic autocorrelation at lag d: A(d) disagreements between the
/// sequence and its shift, X5 = |2(A - (n-d)/2)/sqrt(n-d)|, two-sided
/// normal. Requires 1 <= d <= n/2 and n - d >= 10.
pub fn autocorr(s: &BitSeq, d: usize, alpha: f64) -> Result<TestReport, TestError> {
    let n = s.len();
    if d < 1 || d > n / 2 {
        return Err(TestError::LagOutOfRange { d, max: n / 2 });
    }
    if n - d < 10 {
        return Err(TestError::TooShort {
            needed: d + 10,
            got: n,
        });
    }
    let mut a = 0u64;
    for i in 0..n - d {
        a += (s.get(i) ^ s.get(i + d)) as u64;
    }
    let nd = (n - d) as f64;
    let x5 = (2.0 * (a as f64 - nd / 2.0) / nd.sqrt()).abs();
    Ok(TestReport::from_normal("autocorr", x5, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statlab::Dof;

    fn alternating(n: usize) -> BitSeq {
        (0..n).map(|i| i % 2 == 1).collect()
    }

    #[test]
    fn monobit_extremes() {
        let zeros = BitSeq::zeros(100);
        let r = monobit(&zeros, 0.05).unwrap();
        assert_eq!(r.statistic, 100.0);
        assert!(!r.passed);

        let r = monobit(&alternating(100), 0.05).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert!(r.passed);

        assert!(matches!(
            monobit(&BitSeq::new(), 0.05),
            Err(TestError::TooShort { .. })
        ));
    }

    // Direct formula: alternating 100 bits has n01 = 50, n10 = 49,
    // X2 = (4/99)(2500 + 2401) - (2/100)(5000) + 1 = 99.0202...
    #[test]
    fn serial_alternating() {
        let r = serial2(&alternating(100), 0.05).unwrap();
        assert!((r.statistic - 99.0202020202).abs() < 1e-9, "{}", r.statistic);
        assert!(!r.passed);
    }

    // All zeros, n = 100: X2 = (4/99)*99^2 - (2/100)*100^2 + 1 = 197.
    #[test]
    fn serial_all_zeros() {
        let r = serial2(&BitSeq::zeros(100), 0.05).unwrap();
        assert!((r.statistic - 197.0).abs() < 1e-9);
        assert!(matches!(
            serial2(&BitSeq::zeros(20), 0.05),
            Err(TestError::TooShort { needed: 21, .. })
        ));
    }

    // Setting m = 1 reduces the poker test to the frequency test.
    #[test]
    fn poker_m1_equals_monobit() {
        let mut z = 0x2545F491u32;
        let s: BitSeq = (0..4000)
            .map(|_| {
                z ^= z << 13;
                z ^= z >> 17;
                z ^= z << 5;
                z & 1 == 1
            })
            .collect();
        let p = poker(&s, 1, 0.05).unwrap();
        let m = monobit(&s, 0.05).unwrap();
        assert!((p.statistic - m.statistic).abs() < 1e-9);
    }

    // 16 blocks cycling through all nibbles, each appearing 40 times.
    #[test]
    fn poker_uniform_nibbles() {
        let mut s = BitSeq::new();
        for i in 0..640 {
            s.push_bits_msb(i % 16, 4);
        }
        assert_eq!(s.len(), 2560);
        let r = poker(&s, 4, 0.05).unwrap();
        assert_eq!(r.statistic, 0.0);
    }

    // All-zero blocks: X3 = (256/1280)*1280^2 - 1280 = 326400.
    #[test]
    fn poker_all_zeros_m8() {
        let r = poker(&BitSeq::zeros(10_240), 8, 0.05).unwrap();
        assert!((r.statistic - 326_400.0).abs() < 1e-6);
        assert_eq!(r.dof, Dof::ChiSquare(255));
    }

    #[test]
    fn poker_bound_message_names_minimum() {
        let err = poker(&BitSeq::zeros(100), 8, 0.05).unwrap_err();
        match err {
            TestError::PokerBound { m, min_len, got } => {
                assert_eq!((m, min_len, got), (8, 8 * 5 * 256, 100));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    // e_1 = 12.75, e_2 = 6.3125, e_3 = 3.125 at n = 100, so k = 2.
    #[test]
    fn runs_bucket_cutoff_n100() {
        assert!((expected_runs(100, 1) - 12.75).abs() < 1e-12);
        assert!((expected_runs(100, 2) - 6.3125).abs() < 1e-12);
        assert!((expected_runs(100, 3) - 3.125).abs() < 1e-12);
        let r = runs(&alternating(100), 0.05).unwrap();
        assert_eq!(r.dof, Dof::ChiSquare(2)); // 2k - 2 with k = 2
    }

    // Alternating bits: 50 blocks and 50 gaps, all of length 1; the last
    // bucket carries the tail expectation sum_{i>=2} e_i.
    #[test]
    fn runs_alternating_counts() {
        let s = alternating(100);
        let e1 = expected_runs(100, 1);
        let e2t = expected_runs_tail(100, 2);
        let expect = 2.0 * (50.0 - e1) * (50.0 - e1) / e1 + 2.0 * e2t;
        let r = runs(&s, 0.05).unwrap();
        assert!((r.statistic - expect).abs() < 1e-9);
        assert!(r.statistic >= 0.0);
        assert!(runs(&BitSeq::zeros(37), 0.05).is_err());
    }

    // Category totals agree: e_1 + tail(2) equals the total expected run
    // count sum_{i>=1} e_i.
    #[test]
    fn tail_bucket_completes_expectation() {
        let total: f64 = expected_runs_tail(100, 1);
        assert!((expected_runs(100, 1) + expected_runs_tail(100, 2) - total).abs() < 1e-9);
    }

    // Every adjacent pair differs: A = 99, X5 = sqrt(99).
    #[test]
    fn autocorr_alternating_lag1() {
        let r = autocorr(&alternating(100), 1, 0.05).unwrap();
        assert!((r.statistic - 99f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.dof, Dof::Normal);
        assert!(!r.passed);
    }

    // A d-periodic sequence agrees with itself everywhere at lag d.
    #[test]
    fn autocorr_periodic_self_agreement() {
        let s: BitSeq = (0..120).map(|i| (i / 4) % 2 == 0).collect();
        let r = autocorr(&s, 8, 0.05).unwrap();
        assert!((r.statistic - (112f64).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn autocorr_lag_bounds() {
        let s = BitSeq::zeros(100);
        assert!(matches!(
            autocorr(&s, 0, 0.05),
            Err(TestError::LagOutOfRange { .. })
        ));
        assert!(matches!(
            autocorr(&s, 51, 0.05),
            Err(TestError::LagOutOfRange { .. })
        ));
        assert!(autocorr(&s, 50, 0.05).is_ok());
    }
}
