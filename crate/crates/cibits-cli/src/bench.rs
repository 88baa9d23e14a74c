//! Throughput benchmark: times each generator over a fixed bit volume
//! and reports seconds plus nanoseconds per bit. Reporting only; nothing
//! is asserted here.

use std::hint::black_box;
use std::time::Instant;

use anyhow::Result;

use crate::gen::{GenConfig, GeneratorKind};

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub generator: &'static str,
    pub bits: usize,
    pub seconds: f64,
    pub ns_per_bit: f64,
}

/// One warm-up pass, then `repeats` timed passes keeping the fastest.
/// Every pass rebuilds the generator from the same seed so the measured
/// work is identical.
pub fn bench_generators(
    kinds: &[GeneratorKind],
    bits: usize,
    repeats: usize,
    seed_t: u64,
) -> Result<Vec<BenchRow>> {
    assert!(repeats >= 1);
    let mut rows = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        let cfg = GenConfig::new(kind, seed_t);
        black_box(cfg.build()?.bits(bits)?); // warm-up
        let mut best = f64::INFINITY;
        for _ in 0..repeats {
            let mut src = cfg.build()?;
            let start = Instant::now();
            black_box(src.bits(bits)?);
            best = best.min(start.elapsed().as_secs_f64());
        }
        rows.push(BenchRow {
            generator: kind.name(),
            bits,
            seconds: best,
            ns_per_bit: best * 1e9 / bits as f64,
        });
    }
    Ok(rows)
}
