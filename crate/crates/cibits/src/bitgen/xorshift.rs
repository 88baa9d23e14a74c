//! Marsaglia's 32-bit XORshift generator, period 2^32 - 1.

use super::GenError;

/// 32-bit XORshift state. The internal word is never zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XorShift32 {
    z: u32,
}

impl XorShift32 {
    /// Rejects the forbidden all-zero seed.
    pub fn new(seed: u32) -> Result<Self, GenError> {
        if seed == 0 {
            return Err(GenError::ZeroSeed);
        }
        Ok(XorShift32 { z: seed })
    }

    /// Coerces a zero seed to 1 instead of failing. Used by time seeding.
    pub fn coerced(seed: u32) -> Self {
        XorShift32 { z: seed.max(1) }
    }

    /// One round: z ^= z<<13; z ^= z>>17; z ^= z<<5, in 32-bit arithmetic.
    pub fn next_u32(&mut self) -> u32 {
        let mut z = self.z;
        z ^= z << 13;
        z ^= z >> 17;
        z ^= z << 5;
        self.z = z;
        z
    }

    pub fn state(&self) -> u32 {
        self.z
    }
}
