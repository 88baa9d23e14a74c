//! Library side of the `cibits` command-line tool: bit-file formats,
//! generator wiring, the benchmark harness, experiment data builders, and
//! the watermark attack sweeps. The binary in `main.rs` is a thin argument
//! parser over these functions.

pub mod bench;
pub mod bitio;
pub mod experiments;
pub mod gen;
pub mod report;
pub mod synth;
pub mod wm;

/// Environment variable overriding time seeding: its value replaces the
/// microsecond reading every seeding would otherwise take from the clock.
pub const SEED_ENV_VAR: &str = "CI_RAND_SEED";

/// The raw seed reading: explicit value if given, else the env override,
/// else the clock.
pub fn resolve_seed_t(explicit: Option<u64>) -> u64 {
    if let Some(t) = explicit {
        return t;
    }
    if let Ok(v) = std::env::var(SEED_ENV_VAR) {
        if let Ok(t) = v.parse() {
            return t;
        }
    }
    cibits::bitgen::seed_from_time(32).t
}
