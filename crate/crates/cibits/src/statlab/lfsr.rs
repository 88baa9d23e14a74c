//! Linear complexity over GF(2) via the Berlekamp-Massey algorithm.

use crate::bits::BitSeq;

/// Linear complexity of every prefix: `profile[i]` is the LC of the first
/// i + 1 bits. The ideal random profile follows the line i/2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcProfile {
    pub profile: Vec<usize>,
}

impl LcProfile {
    /// LC of the prefix of length `len` (1-based).
    pub fn at(&self, len: usize) -> usize {
        self.profile[len - 1]
    }
}

/// Length of the shortest LFSR generating `s`. The all-zero sequence has
/// complexity 0.
pub fn berlekamp_massey(s: &BitSeq) -> usize {
    bm_profile(s, false).1
}

/// Linear complexity of every prefix in one pass; O(n^2) total.
pub fn lc_profile(s: &BitSeq) -> LcProfile {
    LcProfile {
        profile: bm_profile(s, true).0,
    }
}

/// Incremental Berlekamp-Massey. Connection polynomials are bit vectors
/// with coefficient j at index j (c[0] = 1 always).
fn bm_profile(s: &BitSeq, keep_profile: bool) -> (Vec<usize>, usize) {
    let n = s.len();
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut l = 0usize; // current LC
    let mut m = 1usize; // steps since the last length change
    let mut profile = Vec::with_capacity(if keep_profile { n } else { 0 });

    // c ^= b * x^shift, dropping terms beyond degree n (they can never
    // matter for a length-n prefix).
    let add_shifted = |c: &mut Vec<bool>, b: &[bool], shift: usize| {
        if shift > n {
            return;
        }
        for j in 0..=n - shift {
            if b[j] {
                c[j + shift] ^= true;
            }
        }
    };

    for i in 0..n {
        // Discrepancy d = s[i] + sum_{j=1..=l} c[j] * s[i-j].
        let mut d = s.get(i);
        for (j, &cj) in c.iter().enumerate().take(l + 1).skip(1) {
            if cj && s.get(i - j) {
                d = !d;
            }
        }
        if !d {
            m += 1;
        } else if 2 * l <= i {
            let t = c.clone();
            add_shifted(&mut c, &b, m);
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            add_shifted(&mut c, &b, m);
            m += 1;
        }
        if keep_profile {
            profile.push(l);
        }
    }
    (profile, l)
}
