//! The generator family: XORshift, the logistic map, and the two
//! chaotic-iterations generators built on top of them.

mod logistic;
mod new_ci;
mod old_ci;
mod seed;
mod selector;
mod xorshift;

pub use logistic::{LogisticMap, DEFAULT_MU};
pub use new_ci::{NewCi, NewCiParams, RoundSource, ScriptedSource, SelectorRule};
pub use old_ci::OldCi;
pub use seed::{logistic_seed_from_t, seed_from_t, seed_from_time, TimeSeed};
pub use selector::{Selector, SelectorKind};
pub use xorshift::XorShift32;

use thiserror::Error;

/// Errors raised by generator construction and stepping.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    /// XORshift cannot be seeded with 0: it is a fixed point of the three
    /// shift-XOR steps.
    #[error("XORshift seed must be nonzero")]
    ZeroSeed,
    /// The logistic iterate left the open interval (0,1), so the orbit has
    /// collapsed onto a fixed point.
    #[error("logistic orbit degenerated to x = {0}")]
    DegenerateOrbit(f64),
    /// Logistic parameters outside the accepted chaotic regime.
    #[error("logistic parameters out of range: x0 = {x0}, mu = {mu}")]
    LogisticParams { x0: f64, mu: f64 },
    /// State width outside the supported 2..=64 range, or a related
    /// parameter inconsistent with it.
    #[error("invalid generator parameter: {0}")]
    InvalidParam(String),
    /// The decimation loop exceeded the consecutive-discard safety cap, or
    /// a scripted source ran dry.
    #[error("generator internal fault: {0}")]
    Fault(String),
}

/// Safety cap on consecutive discarded strategy draws in one round.
pub(crate) const DISCARD_CAP: u32 = 1 << 20;
