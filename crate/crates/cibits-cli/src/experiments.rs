//! Data builders behind the `experiment` subcommand and the NIST export:
//! histogram/intensity maps, the balance comparison, key sensitivity
//! curves, and the linear complexity profile.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use cibits::bitgen::{seed_from_t, NewCi, NewCiParams, SelectorRule};
use cibits::statlab::{
    balance_experiment, key_sensitivity, lc_profile, pair_intensity, PairIntensity,
};

use crate::bitio::write_ascii_stream;
use crate::gen::GenConfig;

/// Histogram and adjacent-pair intensity of `samples` states.
pub fn intensity_data(params: &NewCiParams, samples: usize) -> Result<PairIntensity> {
    let mut gen = NewCi::from_params(params)?;
    let mut states = Vec::with_capacity(samples);
    for _ in 0..samples {
        states.push(gen.next_state()?);
    }
    Ok(pair_intensity(&states, params.n_bits)?)
}

/// Per-run imbalance percentages with decimation on and off. Runs are
/// seeded independently by walking the raw reading.
pub fn balance_pairs(
    base_t: u64,
    n_bits: u32,
    num_seqs: usize,
    seq_len: usize,
) -> Result<(Vec<f64>, Vec<f64>)> {
    let factory = |decimate: bool| {
        move |run: usize| {
            let seed = seed_from_t(base_t.wrapping_add(run as u64).wrapping_mul(2_654_435_761), n_bits);
            let params = NewCiParams {
                n_bits,
                x0: seed.x0,
                y0: seed.y0,
                y0b: seed.y0b,
                rule: SelectorRule::G1,
                decimate,
            };
            NewCi::from_params(&params).expect("valid derived seeds")
        }
    };
    let with = balance_experiment(factory(true), num_seqs, seq_len)?;
    let without = balance_experiment(factory(false), num_seqs, seq_len)?;
    Ok((with, without))
}

/// Mean variance ratio P over `pairs` one-bit seed flips at each length.
/// Flips walk the XORshift seed bits (positions N..N+64), where full
/// sensitivity is expected.
pub fn sensitivity_curve(
    base_t: u64,
    n_bits: u32,
    lengths: &[usize],
    pairs: u32,
) -> Result<Vec<(usize, f64)>> {
    let mut rows = Vec::with_capacity(lengths.len());
    for &len in lengths {
        let mut acc = 0.0;
        for i in 0..pairs {
            let seed = seed_from_t(
                base_t.wrapping_add(i as u64).wrapping_mul(0x9E37_79B9),
                n_bits,
            );
            let params = NewCiParams::new(n_bits, seed.x0, seed.y0, seed.y0b);
            let bit = n_bits + (i % 64);
            acc += key_sensitivity(&params, bit, len)?;
        }
        rows.push((len, acc / pairs as f64));
    }
    Ok(rows)
}

/// Linear complexity profile rows (i, lc, ideal = i/2) of a fresh stream.
pub fn lc_profile_rows(cfg: &GenConfig, bits: usize) -> Result<Vec<(usize, usize, f64)>> {
    let stream = cfg.build()?.bits(bits)?;
    let profile = lc_profile(&stream);
    Ok(profile
        .profile
        .iter()
        .enumerate()
        .map(|(idx, &lc)| (idx + 1, lc, (idx + 1) as f64 / 2.0))
        .collect())
}

/// Writes `sequences` bit files in the external suite's single-stream
/// ASCII format plus a `manifest.csv` naming every file and its seeds.
/// Returns the written file paths (manifest last).
pub fn nist_export(
    dir: &Path,
    cfg: &GenConfig,
    sequences: usize,
    bits: usize,
) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut paths = Vec::with_capacity(sequences + 1);
    let manifest_path = dir.join("manifest.csv");
    let mut manifest = BufWriter::new(
        File::create(&manifest_path).with_context(|| format!("creating manifest in {}", dir.display()))?,
    );
    writeln!(manifest, "file,bits,generator,n_bits,x0,y0,y0b")?;
    for i in 0..sequences {
        let mut run_cfg = cfg.clone();
        run_cfg.t = cfg.t.wrapping_add(i as u64).wrapping_mul(0x2545_F491_4F6C_DD1D);
        let params = run_cfg.new_ci_params();
        run_cfg.x0 = Some(params.x0);
        run_cfg.y0 = Some(params.y0);
        run_cfg.y0b = Some(params.y0b);
        let name = format!("seq_{i:03}.txt");
        let path = dir.join(&name);
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        let mut w = BufWriter::new(file);
        let stream = run_cfg.build()?.bits(bits)?;
        write_ascii_stream(&mut w, &stream)?;
        w.flush()?;
        writeln!(
            manifest,
            "{name},{bits},{},{},{:x},{},{}",
            run_cfg.kind.name(),
            run_cfg.n_bits,
            params.x0,
            params.y0,
            params.y0b
        )?;
        paths.push(path);
    }
    manifest.flush()?;
    paths.push(manifest_path);
    Ok(paths)
}
