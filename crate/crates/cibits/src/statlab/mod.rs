//! Statistical evaluation: the five-test battery, p-value machinery,
//! linear complexity, and the balance/sensitivity experiments.

mod battery;
mod chi2;
mod experiments;
mod lfsr;

pub use battery::{autocorr, monobit, poker, runs, serial2};
pub use chi2::{chi2_gof, chi2_sf, normal_two_sided_p};
pub use experiments::{
    balance_experiment, hamming, key_sensitivity, pair_intensity, PairIntensity,
};
pub use lfsr::{berlekamp_massey, lc_profile, LcProfile};

use thiserror::Error;

/// Default significance level for pass/fail verdicts.
pub const DEFAULT_ALPHA: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TestError {
    #[error("sequence too short: need at least {needed} bits, got {got}")]
    TooShort { needed: usize, got: usize },
    #[error("poker test with m = {m} needs n >= {min_len} bits, got {got}")]
    PokerBound { m: u32, min_len: usize, got: usize },
    #[error("autocorrelation lag {d} outside 1..={max}")]
    LagOutOfRange { d: usize, max: usize },
    #[error("length mismatch: {a} vs {b} bits")]
    LengthMismatch { a: usize, b: usize },
    #[error("state width {n_bits} too large for pair intensity (max 16)")]
    WidthTooLarge { n_bits: u32 },
    #[error("generator failure during experiment: {0}")]
    Generator(#[from] crate::bitgen::GenError),
}

/// Reference distribution of a test statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dof {
    ChiSquare(u32),
    Normal,
}

impl std::fmt::Display for Dof {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dof::ChiSquare(k) => write!(f, "{k}"),
            Dof::Normal => write!(f, "normal"),
        }
    }
}

/// One test outcome: the raw statistic, its reference distribution, the
/// p-value, and the verdict at the significance level used.
#[derive(Debug, Clone, PartialEq)]
pub struct TestReport {
    pub test_name: &'static str,
    pub statistic: f64,
    pub dof: Dof,
    pub p_value: f64,
    pub alpha: f64,
    pub passed: bool,
}

impl TestReport {
    pub(crate) fn from_chi2(test_name: &'static str, statistic: f64, dof: u32, alpha: f64) -> Self {
        let p_value = chi2_sf(statistic, dof);
        TestReport {
            test_name,
            statistic,
            dof: Dof::ChiSquare(dof),
            p_value,
            alpha,
            passed: p_value >= alpha,
        }
    }

    pub(crate) fn from_normal(test_name: &'static str, statistic: f64, alpha: f64) -> Self {
        let p_value = normal_two_sided_p(statistic);
        TestReport {
            test_name,
            statistic,
            dof: Dof::Normal,
            p_value,
            alpha,
            passed: p_value >= alpha,
        }
    }
}
