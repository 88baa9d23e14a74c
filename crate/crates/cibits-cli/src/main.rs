//! `cibits` — generate chaotic-iterations pseudo-random bits, test them,
//! benchmark the generators, export sequences for the external test
//! suite, and run the watermarking pipeline with its attack sweeps.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cibits::bitgen::{SelectorRule, DEFAULT_MU};
use cibits::imagery::{read_pbm, read_pgm, write_pbm, write_pgm, BitPlaneSpec};
use cibits::statlab::chi2_gof;
use cibits::stego::{
    embed, extract, similarity, EmbedMode, MixMode, StegoKey, DEFAULT_KEY_WIDTH,
};
use cibits_cli::bench::bench_generators;
use cibits_cli::bitio::{read_bits, write_bits, BitFormat};
use cibits_cli::experiments::{
    balance_pairs, intensity_data, lc_profile_rows, nist_export, sensitivity_curve,
};
use cibits_cli::gen::{GenConfig, GeneratorKind};
use cibits_cli::report::{print_table, run_battery, write_csv, BatteryConfig, ALL_TESTS};
use cibits_cli::synth;
use cibits_cli::wm::{attack_table, AttackKind};
use cibits_cli::resolve_seed_t;

#[derive(Parser)]
#[command(name = "cibits", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a bit file from one of the generators.
    Gen(GenArgs),
    /// Run the statistical test battery over a bit file.
    Test(TestArgs),
    /// Time the generators over a fixed bit volume.
    Bench(BenchArgs),
    /// Export sequences in the external suite's ASCII stream format.
    NistExport(NistExportArgs),
    /// Embed a watermark into a PGM cover image.
    WmEmbed(WmEmbedArgs),
    /// Extract a watermark from a PGM image.
    WmExtract(WmExtractArgs),
    /// Run an attack sweep and emit the robustness table as CSV.
    WmAttack(WmAttackArgs),
    /// Reproduce the evaluation experiments as CSV data files.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GeneratorArg {
    Xorshift,
    Logistic,
    OldCi,
    NewCi,
}

impl From<GeneratorArg> for GeneratorKind {
    fn from(a: GeneratorArg) -> Self {
        match a {
            GeneratorArg::Xorshift => GeneratorKind::XorShift,
            GeneratorArg::Logistic => GeneratorKind::Logistic,
            GeneratorArg::OldCi => GeneratorKind::OldCi,
            GeneratorArg::NewCi => GeneratorKind::NewCi,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SelectorArg {
    /// Binomial ladder counting up.
    G1,
    /// Mirrored binomial ladder.
    G2,
    /// Degraded scheme m = y mod N.
    Mod,
}

impl From<SelectorArg> for SelectorRule {
    fn from(a: SelectorArg) -> Self {
        match a {
            SelectorArg::G1 => SelectorRule::G1,
            SelectorArg::G2 => SelectorRule::G2,
            SelectorArg::Mod => SelectorRule::Mod,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// '0'/'1' characters, newline every 64 bits.
    Ascii,
    /// Raw bytes, MSB first, zero-padded tail.
    Packed,
}

impl From<FormatArg> for BitFormat {
    fn from(a: FormatArg) -> Self {
        match a {
            FormatArg::Ascii => BitFormat::Ascii,
            FormatArg::Packed => BitFormat::Packed,
        }
    }
}

/// Seed and generator flags shared by the generating subcommands.
#[derive(Args, Clone)]
struct GeneratorFlags {
    /// Generator to run.
    #[arg(long, value_enum, default_value = "new-ci")]
    generator: GeneratorArg,
    /// State width N (CI generators).
    #[arg(long, default_value_t = 4)]
    n_bits: u32,
    /// Selector deriving the per-round flip count (new-ci).
    #[arg(long, value_enum, default_value = "g1")]
    selector: SelectorArg,
    /// Disable the mark vector (the degraded no-decimation variant).
    #[arg(long)]
    no_mark: bool,
    /// Raw seed reading; overrides the clock and CI_RAND_SEED.
    #[arg(long)]
    seed: Option<u64>,
    /// Explicit initial state (hex).
    #[arg(long, value_parser = parse_hex_u64)]
    x0: Option<u64>,
    /// Explicit selector-stream XORshift seed.
    #[arg(long)]
    y0: Option<u32>,
    /// Explicit strategy-stream XORshift seed.
    #[arg(long)]
    y0b: Option<u32>,
    /// Logistic control parameter (logistic and old-ci).
    #[arg(long, default_value_t = DEFAULT_MU)]
    mu: f64,
    /// Old CI constant c (defaults to 3N).
    #[arg(long)]
    c: Option<u32>,
    /// Logistic seed of the first map, in (0,1).
    #[arg(long)]
    lm_a: Option<f64>,
    /// Logistic seed of the second map, in (0,1).
    #[arg(long)]
    lm_b: Option<f64>,
}

impl GeneratorFlags {
    fn config(&self) -> GenConfig {
        let mut cfg = GenConfig::new(self.generator.into(), resolve_seed_t(self.seed));
        cfg.n_bits = self.n_bits;
        cfg.rule = self.selector.into();
        cfg.decimate = !self.no_mark;
        cfg.x0 = self.x0;
        cfg.y0 = self.y0;
        cfg.y0b = self.y0b;
        cfg.mu = self.mu;
        cfg.c = self.c;
        cfg.lm_a = self.lm_a;
        cfg.lm_b = self.lm_b;
        cfg
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    flags: GeneratorFlags,
    /// Number of bits to emit.
    #[arg(long, default_value_t = 200_000)]
    count: usize,
    #[arg(long, value_enum, default_value = "ascii")]
    format: FormatArg,
    /// Output bit file.
    #[arg(long)]
    out: PathBuf,
    /// Inject the m sequence directly (comma-separated), bypassing the
    /// selector XORshift. Requires --trace-b.
    #[arg(long, requires = "trace_b")]
    trace_m: Option<String>,
    /// Inject the 1-based b position sequence directly.
    #[arg(long, requires = "trace_m")]
    trace_b: Option<String>,
}

#[derive(Args)]
struct TestArgs {
    /// Bit file to test.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ascii")]
    format: FormatArg,
    /// Comma-separated subset of monobit,serial,poker,runs,autocorr.
    #[arg(long, default_value = "all")]
    tests: String,
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Poker block size m.
    #[arg(long, default_value_t = 8)]
    poker_m: u32,
    /// Autocorrelation lag d.
    #[arg(long, default_value_t = 8)]
    autocorr_d: usize,
    /// Also write the outcome as CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated generators (default: all four).
    #[arg(long, default_value = "logistic,xorshift,old-ci,new-ci")]
    generators: String,
    /// Bits generated per timed pass.
    #[arg(long, default_value_t = 200_000)]
    bits: usize,
    /// Timed passes per generator; the fastest wins.
    #[arg(long, default_value_t = 5)]
    repeats: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the rows as CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Walk the full XORshift cycle and report its period (minutes).
    #[arg(long)]
    slow_full_period: bool,
}

#[derive(Args)]
struct NistExportArgs {
    #[command(flatten)]
    flags: GeneratorFlags,
    /// Number of sequences (files).
    #[arg(long, default_value_t = 100)]
    sequences: usize,
    /// Bits per sequence.
    #[arg(long, default_value_t = 1_000_000)]
    bits: usize,
    /// Output directory for seq_*.txt and manifest.csv.
    #[arg(long)]
    out_dir: PathBuf,
}

#[derive(Args, Clone)]
struct PlaneFlags {
    /// MSC bit mask over pixel bits 7..0.
    #[arg(long, default_value_t = 0xF0, value_parser = parse_hex_u8)]
    msc: u8,
    /// LSC bit mask over pixel bits 7..0.
    #[arg(long, default_value_t = 0x07, value_parser = parse_hex_u8)]
    lsc: u8,
}

impl PlaneFlags {
    fn spec(&self) -> Result<BitPlaneSpec> {
        Ok(BitPlaneSpec::new(self.msc, self.lsc)?)
    }
}

#[derive(Args)]
struct WmEmbedArgs {
    /// Cover image (binary PGM).
    #[arg(long)]
    cover: PathBuf,
    /// Watermark (binary PBM).
    #[arg(long)]
    watermark: PathBuf,
    /// Key file; see the README for the line format.
    #[arg(long)]
    key: PathBuf,
    /// Watermarked output image.
    #[arg(long)]
    out: PathBuf,
    /// Create the key file first with fresh seeds and the flags below.
    #[arg(long)]
    new_key: bool,
    /// Mixing mode for --new-key.
    #[arg(long, default_value = "ci")]
    mix: String,
    /// Embedding mode for --new-key.
    #[arg(long, default_value = "subst")]
    mode: String,
    /// Authenticated watermarking for --new-key.
    #[arg(long)]
    auth: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    plane: PlaneFlags,
}

#[derive(Args)]
struct WmExtractArgs {
    /// Image to extract from (binary PGM).
    #[arg(long)]
    image: PathBuf,
    #[arg(long)]
    key: PathBuf,
    /// Watermark width in pixels.
    #[arg(long)]
    width: u32,
    /// Watermark height in pixels.
    #[arg(long)]
    height: u32,
    /// Original cover, required in switch mode.
    #[arg(long)]
    original: Option<PathBuf>,
    /// Reference watermark to score the extraction against.
    #[arg(long)]
    reference: Option<PathBuf>,
    /// Write the extracted watermark here (binary PBM).
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    plane: PlaneFlags,
}

#[derive(Args)]
struct WmAttackArgs {
    /// Cover image; a built-in test card when omitted.
    #[arg(long)]
    cover: Option<PathBuf>,
    /// Watermark; a built-in 64x64 mark when omitted.
    #[arg(long)]
    watermark: Option<PathBuf>,
    /// Key file; fresh seeds when omitted.
    #[arg(long)]
    key: Option<PathBuf>,
    /// Attack to sweep.
    #[arg(long, value_enum)]
    attack: AttackArg,
    /// Comma-separated intensities; the table defaults when omitted.
    #[arg(long)]
    sweep: Option<String>,
    /// Keys averaged per intensity.
    #[arg(long, default_value_t = 10)]
    keys: u32,
    /// Seed for the Gaussian noise attack.
    #[arg(long, default_value_t = 0xA77AC4)]
    noise_seed: u64,
    #[arg(long)]
    seed: Option<u64>,
    /// Output CSV path.
    #[arg(long)]
    csv: PathBuf,
    #[command(flatten)]
    plane: PlaneFlags,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AttackArg {
    Crop,
    Rotate,
    Jpeg,
    Gauss,
}

impl From<AttackArg> for AttackKind {
    fn from(a: AttackArg) -> Self {
        match a {
            AttackArg::Crop => AttackKind::Crop,
            AttackArg::Rotate => AttackKind::Rotate,
            AttackArg::Jpeg => AttackKind::Jpeg,
            AttackArg::Gauss => AttackKind::Gauss,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExperimentArg {
    /// Histogram and adjacent-pair intensity data (g1 and mod selectors).
    Fig1,
    /// Balance comparison with and without decimation.
    Fig2,
    /// Key sensitivity curve over sequence lengths.
    Fig3,
    /// Linear complexity profile of one stream.
    Fig4,
    /// All four robustness attack tables.
    Tables,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(value_enum)]
    which: ExperimentArg,
    /// Directory receiving the CSV files.
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    /// States sampled for fig1.
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    /// Sequences for fig2.
    #[arg(long, default_value_t = 100)]
    seqs: usize,
    /// Bits per sequence for fig2.
    #[arg(long, default_value_t = 100_000)]
    seq_len: usize,
    /// Seed pairs per length for fig3.
    #[arg(long, default_value_t = 20)]
    pairs: u32,
    /// Stream length for fig4.
    #[arg(long, default_value_t = 2_000)]
    bits: usize,
    /// Keys averaged per intensity for the attack tables.
    #[arg(long, default_value_t = 10)]
    keys: u32,
}

fn parse_hex_u64(s: &str) -> Result<u64, String> {
    let t = s.trim_start_matches("0x");
    u64::from_str_radix(t, 16).map_err(|e| format!("bad hex value {s:?}: {e}"))
}

fn parse_hex_u8(s: &str) -> Result<u8, String> {
    let t = s.trim_start_matches("0x");
    u8::from_str_radix(t, 16)
        .or_else(|_| s.parse())
        .map_err(|e| format!("bad mask {s:?}: {e}"))
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|p| p.trim().parse().context("list entries must be integers"))
        .collect()
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|p| p.trim().parse().context("list entries must be numbers"))
        .collect()
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Test(args) => cmd_test(args),
        Command::Bench(args) => cmd_bench(args),
        Command::NistExport(args) => cmd_nist_export(args),
        Command::WmEmbed(args) => cmd_wm_embed(args),
        Command::WmExtract(args) => cmd_wm_extract(args),
        Command::WmAttack(args) => cmd_wm_attack(args),
        Command::Experiment(args) => cmd_experiment(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let cfg = args.flags.config();
    let mut source = match (&args.trace_m, &args.trace_b) {
        (Some(m), Some(b)) => cfg.build_traced(&parse_u32_list(m)?, &parse_u32_list(b)?)?,
        _ => cfg.build()?,
    };
    let bits = source.bits(args.count)?;
    write_bits(&args.out, &bits, args.format.into())?;
    println!(
        "wrote {} bits ({}) to {}",
        bits.len(),
        cfg.kind.name(),
        args.out.display()
    );
    Ok(())
}

fn cmd_test(args: TestArgs) -> Result<()> {
    let bits = read_bits(&args.input, args.format.into())?;
    let tests: Vec<String> = if args.tests == "all" {
        ALL_TESTS.iter().map(|s| s.to_string()).collect()
    } else {
        args.tests.split(',').map(|s| s.trim().to_string()).collect()
    };
    let cfg = BatteryConfig {
        alpha: args.alpha,
        poker_m: args.poker_m,
        autocorr_d: args.autocorr_d,
    };
    let rows = run_battery(&bits, &tests, &cfg)?;
    println!("{} bits from {}", bits.len(), args.input.display());
    print_table(&mut std::io::stdout().lock(), &rows)?;
    if let Some(csv_path) = &args.csv {
        let mut w = BufWriter::new(
            File::create(csv_path).with_context(|| format!("creating {}", csv_path.display()))?,
        );
        write_csv(&mut w, &rows)?;
        w.flush()?;
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let kinds: Vec<GeneratorKind> = args
        .generators
        .split(',')
        .map(|name| {
            Ok(match name.trim() {
                "xorshift" => GeneratorKind::XorShift,
                "logistic" => GeneratorKind::Logistic,
                "old-ci" => GeneratorKind::OldCi,
                "new-ci" => GeneratorKind::NewCi,
                other => bail!("unknown generator {other:?}"),
            })
        })
        .collect::<Result<_>>()?;
    let rows = bench_generators(&kinds, args.bits, args.repeats, resolve_seed_t(args.seed))?;
    println!(
        "{:<10} {:>12} {:>12} {:>10}",
        "generator", "bits", "seconds", "ns/bit"
    );
    for r in &rows {
        println!(
            "{:<10} {:>12} {:>12.6} {:>10.3}",
            r.generator, r.bits, r.seconds, r.ns_per_bit
        );
    }
    if let Some(csv_path) = &args.csv {
        let mut w = BufWriter::new(File::create(csv_path)?);
        writeln!(w, "generator,bits,seconds,ns_per_bit")?;
        for r in &rows {
            writeln!(w, "{},{},{},{}", r.generator, r.bits, r.seconds, r.ns_per_bit)?;
        }
        w.flush()?;
    }
    if args.slow_full_period {
        let mut g = cibits::bitgen::XorShift32::new(1)?;
        let start = std::time::Instant::now();
        let mut steps = 0u64;
        while g.next_u32() != 1 {
            steps += 1;
        }
        println!(
            "xorshift cycle: {} states in {:.1}s (2^32 - 1 = {})",
            steps + 1,
            start.elapsed().as_secs_f64(),
            (1u64 << 32) - 1
        );
    }
    Ok(())
}

fn cmd_nist_export(args: NistExportArgs) -> Result<()> {
    let cfg = args.flags.config();
    let paths = nist_export(&args.out_dir, &cfg, args.sequences, args.bits)?;
    println!(
        "wrote {} sequences of {} bits plus manifest under {}",
        args.sequences,
        args.bits,
        args.out_dir.display()
    );
    println!("manifest: {}", paths.last().expect("manifest path").display());
    Ok(())
}

fn load_key(path: &Path) -> Result<StegoKey> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading key file {}", path.display()))?;
    text.trim()
        .parse()
        .with_context(|| format!("parsing key file {}", path.display()))
}

fn fresh_key(seed: Option<u64>, mix: &str, mode: &str, auth: bool) -> Result<StegoKey> {
    let t = resolve_seed_t(seed);
    let s = cibits::bitgen::seed_from_t(t, DEFAULT_KEY_WIDTH);
    let mut key = StegoKey::new(s.x0, s.y0, s.y0b, DEFAULT_KEY_WIDTH);
    key.mix = match mix {
        "xor" => MixMode::Xor,
        "ci" => MixMode::Chaotic,
        other => bail!("unknown mix mode {other:?} (xor|ci)"),
    };
    key.mode = match mode {
        "switch" => EmbedMode::Switch,
        "subst" => EmbedMode::Substitute,
        other => bail!("unknown embed mode {other:?} (switch|subst)"),
    };
    key.authenticated = auth;
    Ok(key)
}

fn cmd_wm_embed(args: WmEmbedArgs) -> Result<()> {
    let key = if args.new_key {
        let key = fresh_key(args.seed, &args.mix, &args.mode, args.auth)?;
        std::fs::write(&args.key, format!("{key}\n"))
            .with_context(|| format!("writing key file {}", args.key.display()))?;
        key
    } else {
        load_key(&args.key)?
    };
    let cover = read_pgm(File::open(&args.cover).with_context(|| args.cover.display().to_string())?)?;
    let wm = read_pbm(
        File::open(&args.watermark).with_context(|| args.watermark.display().to_string())?,
    )?;
    let stego = embed(&cover, &wm, &key, &args.plane.spec()?)?;
    write_pgm(&stego, File::create(&args.out)?)?;
    println!(
        "embedded {}x{} watermark into {} -> {}",
        wm.width(),
        wm.height(),
        args.cover.display(),
        args.out.display()
    );
    Ok(())
}

fn cmd_wm_extract(args: WmExtractArgs) -> Result<()> {
    let key = load_key(&args.key)?;
    let img = read_pgm(File::open(&args.image).with_context(|| args.image.display().to_string())?)?;
    let original = match &args.original {
        Some(p) => Some(read_pgm(File::open(p).with_context(|| p.display().to_string())?)?),
        None => None,
    };
    let wm = extract(
        &img,
        &key,
        &args.plane.spec()?,
        (args.width, args.height),
        original.as_ref(),
    )?;
    if let Some(ref_path) = &args.reference {
        let reference = read_pbm(File::open(ref_path)?)?;
        let score = similarity(&wm, &reference)?;
        println!("similarity: {score:.2}%");
    }
    if let Some(out) = &args.out {
        write_pbm(&wm, File::create(out)?)?;
        println!("extracted watermark -> {}", out.display());
    }
    Ok(())
}

fn cmd_wm_attack(args: WmAttackArgs) -> Result<()> {
    let cover = match &args.cover {
        Some(p) => read_pgm(File::open(p).with_context(|| p.display().to_string())?)?,
        None => synth::carrier(256, 256),
    };
    let wm = match &args.watermark {
        Some(p) => read_pbm(File::open(p).with_context(|| p.display().to_string())?)?,
        None => synth::watermark(64),
    };
    let key = match &args.key {
        Some(p) => load_key(p)?,
        None => fresh_key(args.seed, "ci", "subst", false)?,
    };
    let kind: AttackKind = args.attack.into();
    let sweep = match &args.sweep {
        Some(s) => parse_f64_list(s)?,
        None => kind.default_sweep(),
    };
    let rows = attack_table(
        &cover,
        &wm,
        &key,
        &args.plane.spec()?,
        kind,
        &sweep,
        args.keys,
        args.noise_seed,
    )?;
    let mut w = BufWriter::new(File::create(&args.csv)?);
    writeln!(w, "intensity,unauth_similarity,auth_similarity")?;
    println!(
        "{:<10} {:>12} {:>18} {:>18}",
        "attack", "intensity", "unauth similarity", "auth similarity"
    );
    for r in &rows {
        writeln!(w, "{},{},{}", r.intensity, r.unauth_similarity, r.auth_similarity)?;
        println!(
            "{:<10} {:>12} {:>17.2}% {:>17.2}%",
            kind.name(),
            r.intensity,
            r.unauth_similarity,
            r.auth_similarity
        );
    }
    w.flush()?;
    Ok(())
}

fn write_csv_file(path: &Path, header: &str, rows: &[String]) -> Result<()> {
    let mut w = BufWriter::new(
        File::create(path).with_context(|| format!("creating {}", path.display()))?,
    );
    writeln!(w, "{header}")?;
    for row in rows {
        writeln!(w, "{row}")?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_experiment(args: ExperimentArgs) -> Result<()> {
    std::fs::create_dir_all(&args.out_dir)?;
    let t = resolve_seed_t(args.seed);
    let dir = &args.out_dir;
    match args.which {
        ExperimentArg::Fig1 => {
            for (rule, tag) in [(SelectorRule::G1, "g1"), (SelectorRule::Mod, "mod")] {
                let seed = cibits::bitgen::seed_from_t(t, 4);
                let mut params = cibits::bitgen::NewCiParams::new(4, seed.x0, seed.y0, seed.y0b);
                params.rule = rule;
                let pi = intensity_data(&params, args.samples)?;
                write_csv_file(
                    &dir.join(format!("histogram_{tag}.csv")),
                    "value,count",
                    &pi.histogram
                        .iter()
                        .enumerate()
                        .map(|(v, c)| format!("{v},{c}"))
                        .collect::<Vec<_>>(),
                )?;
                write_csv_file(
                    &dir.join(format!("intensity_{tag}.csv")),
                    "x,y,count",
                    &pi.pairs
                        .iter()
                        .map(|(&(x, y), c)| format!("{x},{y},{c}"))
                        .collect::<Vec<_>>(),
                )?;
                let uniform = vec![1.0 / 16.0; 16];
                let gof = chi2_gof(&pi.histogram, &uniform, 0.0001);
                println!(
                    "fig1 {tag}: histogram chi2 = {:.3}, p = {:.6} ({})",
                    gof.statistic,
                    gof.p_value,
                    if gof.passed { "uniform" } else { "NOT uniform" }
                );
            }
        }
        ExperimentArg::Fig2 => {
            let (with, without) = balance_pairs(t, 4, args.seqs, args.seq_len)?;
            let rows: Vec<String> = with
                .iter()
                .zip(&without)
                .enumerate()
                .map(|(run, (w, wo))| format!("{run},{w},{wo}"))
                .collect();
            write_csv_file(
                &dir.join("balance.csv"),
                "run,with_decimation,without_decimation",
                &rows,
            )?;
            let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
            println!(
                "fig2: mean imbalance with decimation {:.4}%, without {:.4}%",
                mean(&with),
                mean(&without)
            );
        }
        ExperimentArg::Fig3 => {
            let lengths = [1_000, 2_000, 5_000, 10_000, 20_000, 50_000, 100_000];
            let rows = sensitivity_curve(t, 4, &lengths, args.pairs)?;
            write_csv_file(
                &dir.join("sensitivity.csv"),
                "length,p",
                &rows
                    .iter()
                    .map(|(len, p)| format!("{len},{p}"))
                    .collect::<Vec<_>>(),
            )?;
            for (len, p) in rows {
                println!("fig3: n = {len:>7}  P = {p:.4}");
            }
        }
        ExperimentArg::Fig4 => {
            let mut cfg = GenConfig::new(GeneratorKind::NewCi, t);
            cfg.n_bits = 4;
            let rows = lc_profile_rows(&cfg, args.bits)?;
            write_csv_file(
                &dir.join("lc_profile.csv"),
                "i,lc,ideal",
                &rows
                    .iter()
                    .map(|(i, lc, ideal)| format!("{i},{lc},{ideal}"))
                    .collect::<Vec<_>>(),
            )?;
            let (i, lc, _) = rows.last().expect("nonempty profile");
            println!("fig4: LC({i}) = {lc} (ideal {})", *i as f64 / 2.0);
        }
        ExperimentArg::Tables => {
            let cover = synth::carrier(256, 256);
            let wm = synth::watermark(64);
            let base = fresh_key(Some(t), "ci", "subst", false)?;
            for kind in [
                AttackKind::Crop,
                AttackKind::Rotate,
                AttackKind::Jpeg,
                AttackKind::Gauss,
            ] {
                let rows = attack_table(
                    &cover,
                    &wm,
                    &base,
                    &BitPlaneSpec::default(),
                    kind,
                    &kind.default_sweep(),
                    args.keys,
                    t ^ 0xA77AC4,
                )?;
                write_csv_file(
                    &dir.join(format!("table_{}.csv", kind.name())),
                    "intensity,unauth_similarity,auth_similarity",
                    &rows
                        .iter()
                        .map(|r| {
                            format!("{},{},{}", r.intensity, r.unauth_similarity, r.auth_similarity)
                        })
                        .collect::<Vec<_>>(),
                )?;
                for r in &rows {
                    println!(
                        "{:<7} {:>6}: unauth {:>6.2}%  auth {:>6.2}%",
                        kind.name(),
                        r.intensity,
                        r.unauth_similarity,
                        r.auth_similarity
                    );
                }
            }
        }
    }
    Ok(())
}
