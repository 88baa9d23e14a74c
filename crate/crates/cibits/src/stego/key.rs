//! The secret key: seeds, state width, and mode flags. Serialized as one
//! line of `key=value` pairs so keys can be stored and exchanged as plain
//! text.

use std::fmt;
use std::str::FromStr;

use crate::bitgen::{NewCi, NewCiParams};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixMode {
    /// XOR with the generator keystream; involutive.
    Xor,
    /// Chaotic iterations flipping strategy-selected watermark bits;
    /// inverted by replaying the same flips.
    Chaotic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbedMode {
    /// Negate the selected LSCs where the mixed watermark bit is set.
    /// Extraction needs the original cover (non-blind).
    Switch,
    /// Overwrite the selected LSCs with the mixed watermark (blind).
    Substitute,
}

/// Seeds and flags fully determining mixing, strategy, and embedding
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StegoKey {
    pub x0: u64,
    pub y0: u32,
    pub y0b: u32,
    pub n_bits: u32,
    pub mix: MixMode,
    pub mode: EmbedMode,
    pub authenticated: bool,
}

pub const DEFAULT_KEY_WIDTH: u32 = 64;

impl StegoKey {
    /// Coerces zero XORshift seeds to 1.
    pub fn new(x0: u64, y0: u32, y0b: u32, n_bits: u32) -> Self {
        StegoKey {
            x0,
            y0: y0.max(1),
            y0b: y0b.max(1),
            n_bits,
            mix: MixMode::Chaotic,
            mode: EmbedMode::Substitute,
            authenticated: false,
        }
    }

    /// Generator parameters, optionally perturbed by an MSC digest: the
    /// digest is folded to 32 bits and XORed into y0 (coerced nonzero).
    pub(crate) fn generator_params(&self, msc_digest: Option<u64>) -> NewCiParams {
        let mut y0 = self.y0;
        if let Some(d) = msc_digest {
            y0 ^= (d ^ (d >> 32)) as u32;
            if y0 == 0 {
                y0 = 1;
            }
        }
        NewCiParams::new(self.n_bits, self.x0, y0, self.y0b)
    }

    pub(crate) fn generator(
        &self,
        msc_digest: Option<u64>,
    ) -> Result<NewCi, crate::bitgen::GenError> {
        NewCi::from_params(&self.generator_params(msc_digest))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KeyError {
    #[error("missing field {0}")]
    MissingField(&'static str),
    #[error("bad value for {field}: {value:?}")]
    BadValue { field: &'static str, value: String },
    #[error("unknown field {0:?}")]
    UnknownField(String),
}

impl fmt::Display for StegoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x0={:x} y0={} y0b={} n={} mix={} mode={} auth={}",
            self.x0,
            self.y0,
            self.y0b,
            self.n_bits,
            match self.mix {
                MixMode::Xor => "xor",
                MixMode::Chaotic => "ci",
            },
            match self.mode {
                EmbedMode::Switch => "switch",
                EmbedMode::Substitute => "subst",
            },
            self.authenticated as u8,
        )
    }
}

impl FromStr for StegoKey {
    type Err = KeyError;

    fn from_str(s: &str) -> Result<Self, KeyError> {
        let mut x0 = None;
        let mut y0 = None;
        let mut y0b = None;
        let mut n = None;
        let mut mix = None;
        let mut mode = None;
        let mut auth = None;
        for token in s.split_whitespace() {
            let (field, value) = token.split_once('=').ok_or_else(|| {
                KeyError::BadValue {
                    field: "key",
                    value: token.to_string(),
                }
            })?;
            let bad = |field: &'static str| KeyError::BadValue {
                field,
                value: value.to_string(),
            };
            match field {
                "x0" => x0 = Some(u64::from_str_radix(value, 16).map_err(|_| bad("x0"))?),
                "y0" => y0 = Some(value.parse().map_err(|_| bad("y0"))?),
                "y0b" => y0b = Some(value.parse().map_err(|_| bad("y0b"))?),
                "n" => n = Some(value.parse().map_err(|_| bad("n"))?),
                "mix" => {
                    mix = Some(match value {
                        "xor" => MixMode::Xor,
                        "ci" => MixMode::Chaotic,
                        _ => return Err(bad("mix")),
                    })
                }
                "mode" => {
                    mode = Some(match value {
                        "switch" => EmbedMode::Switch,
                        "subst" => EmbedMode::Substitute,
                        _ => return Err(bad("mode")),
                    })
                }
                "auth" => {
                    auth = Some(match value {
                        "0" => false,
                        "1" => true,
                        _ => return Err(bad("auth")),
                    })
                }
                other => return Err(KeyError::UnknownField(other.to_string())),
            }
        }
        let mut key = StegoKey::new(
            x0.ok_or(KeyError::MissingField("x0"))?,
            y0.ok_or(KeyError::MissingField("y0"))?,
            y0b.ok_or(KeyError::MissingField("y0b"))?,
            n.ok_or(KeyError::MissingField("n"))?,
        );
        key.mix = mix.ok_or(KeyError::MissingField("mix"))?;
        key.mode = mode.ok_or(KeyError::MissingField("mode"))?;
        key.authenticated = auth.ok_or(KeyError::MissingField("auth"))?;
        Ok(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_parse_roundtrip() {
        let mut key = StegoKey::new(0xDEAD_BEEF_0123, 42, 99, 64);
        key.mix = MixMode::Xor;
        key.mode = EmbedMode::Switch;
        key.authenticated = true;
        let text = key.to_string();
        assert_eq!(text, "x0=deadbeef0123 y0=42 y0b=99 n=64 mix=xor mode=switch auth=1");
        assert_eq!(text.parse::<StegoKey>().unwrap(), key);
    }

    #[test]
    fn zero_seeds_coerced() {
        let key = StegoKey::new(0, 0, 0, 64);
        assert_eq!(key.y0, 1);
        assert_eq!(key.y0b, 1);
    }

    #[test]
    fn parse_canonical_line() {
        let key: StegoKey = "x0=ff y0=7 y0b=11 n=8 mix=ci mode=subst auth=0"
            .parse()
            .unwrap();
        assert_eq!(key.x0, 0xFF);
        assert_eq!(key.n_bits, 8);
        assert_eq!(key.mix, MixMode::Chaotic);
        assert_eq!(key.mode, EmbedMode::Substitute);
        assert!(!key.authenticated);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "y0=7 y0b=11 n=8 mix=ci mode=subst auth=0".parse::<StegoKey>(),
            Err(KeyError::MissingField("x0"))
        );
        assert!(matches!(
            "x0=zz y0=7 y0b=11 n=8 mix=ci mode=subst auth=0".parse::<StegoKey>(),
            Err(KeyError::BadValue { field: "x0", .. })
        ));
        assert!(matches!(
            "x0=1 y0=7 y0b=11 n=8 mix=rot13 mode=subst auth=0".parse::<StegoKey>(),
            Err(KeyError::BadValue { field: "mix", .. })
        ));
        assert!(matches!(
            "x0=1 y0=7 y0b=11 n=8 mix=ci mode=subst auth=0 extra=1".parse::<StegoKey>(),
            Err(KeyError::UnknownField(_))
        ));
    }

    #[test]
    fn digest_perturbs_y0() {
        let key = StegoKey::new(5, 1000, 2000, 64);
        let plain = key.generator_params(None);
        let perturbed = key.generator_params(Some(1 << 40));
        assert_eq!(plain.y0, 1000);
        assert_eq!(perturbed.y0, 1000 ^ (1 << 8));
        assert_eq!(plain.y0b, perturbed.y0b);
    }
}
