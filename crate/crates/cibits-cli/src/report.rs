//! Battery orchestration: run the selected tests over one sequence,
//! reporting bound violations per test without aborting the batch, and
//! render the outcome as a table or CSV.

use std::io::Write;

use anyhow::Result;
use cibits::statlab::{autocorr, monobit, poker, runs, serial2, TestError, TestReport};
use cibits::BitSeq;

pub const ALL_TESTS: [&str; 5] = ["monobit", "serial", "poker", "runs", "autocorr"];

/// One row of the battery outcome: a report, or the reason the test could
/// not run on this sequence.
#[derive(Debug)]
pub struct BatteryRow {
    pub name: &'static str,
    pub outcome: Result<TestReport, TestError>,
}

pub struct BatteryConfig {
    pub alpha: f64,
    pub poker_m: u32,
    pub autocorr_d: usize,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        BatteryConfig {
            alpha: 0.05,
            poker_m: 8,
            autocorr_d: 8,
        }
    }
}

/// Runs the named tests in order. Unknown names are rejected up front.
pub fn run_battery(s: &BitSeq, tests: &[String], cfg: &BatteryConfig) -> Result<Vec<BatteryRow>> {
    let mut rows = Vec::with_capacity(tests.len());
    for name in tests {
        let (name, outcome): (&'static str, _) = match name.as_str() {
            "monobit" => ("monobit", monobit(s, cfg.alpha)),
            "serial" => ("serial", serial2(s, cfg.alpha)),
            "poker" => ("poker", poker(s, cfg.poker_m, cfg.alpha)),
            "runs" => ("runs", runs(s, cfg.alpha)),
            "autocorr" => ("autocorr", autocorr(s, cfg.autocorr_d, cfg.alpha)),
            other => anyhow::bail!("unknown test {other:?}; available: {}", ALL_TESTS.join(", ")),
        };
        rows.push(BatteryRow { name, outcome });
    }
    Ok(rows)
}

pub fn print_table<W: Write>(w: &mut W, rows: &[BatteryRow]) -> std::io::Result<()> {
    writeln!(
        w,
        "{:<10} {:>14} {:>8} {:>12}  verdict",
        "test", "statistic", "dof", "p-value"
    )?;
    for row in rows {
        match &row.outcome {
            Ok(r) => writeln!(
                w,
                "{:<10} {:>14.4} {:>8} {:>12.6}  {}",
                r.test_name,
                r.statistic,
                r.dof.to_string(),
                r.p_value,
                if r.passed { "pass" } else { "FAIL" }
            )?,
            Err(e) => writeln!(w, "{:<10} {:>14} {:>8} {:>12}  error: {e}", row.name, "-", "-", "-")?,
        }
    }
    Ok(())
}

/// CSV schema: `test,statistic,dof,p_value,passed`; rows whose test could
/// not run keep the row (count stays equal to the request) with empty
/// numeric fields and `error` in the verdict column.
pub fn write_csv<W: Write>(w: &mut W, rows: &[BatteryRow]) -> std::io::Result<()> {
    writeln!(w, "test,statistic,dof,p_value,passed")?;
    for row in rows {
        match &row.outcome {
            Ok(r) => writeln!(
                w,
                "{},{},{},{},{}",
                r.test_name, r.statistic, r.dof, r.p_value, r.passed
            )?,
            Err(_) => writeln!(w, "{},,,,error", row.name)?,
        }
    }
    Ok(())
}
