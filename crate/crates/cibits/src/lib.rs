//! Chaotic-iterations PRNG family, statistical evaluation lab, and
//! chaos-based image watermarking.
//!
//! The crate is organized around five areas:
//!
//! - [`bitgen`] — the generators: XORshift, the logistic map, the old
//!   CI(Logistic, Logistic) generator, and the new CI(XORshift, XORshift)
//!   generator with its binomial selector and irregular decimation.
//! - [`statlab`] — the five-test battery (monobit, serial, poker, runs,
//!   autocorrelation), chi-square p-value machinery, Berlekamp-Massey
//!   linear complexity, and the balance/sensitivity experiments.
//! - [`imagery`] — 8-bit grayscale and bilevel images, bit-plane access,
//!   and binary Netpbm (P5/P4) codecs.
//! - [`stego`] — watermark mixing, embedding (switch and substitution
//!   modes), extraction, authentication keying, and similarity scoring.
//! - [`attacklab`] — the four attack simulators: zeroing crop, rotation
//!   round trip, JPEG-like compression, and Gaussian noise.
//!
//! All generators are deterministic state machines: identical seeds yield
//! bit-identical streams across runs and platforms.

pub mod attacklab;
pub mod bitgen;
pub mod bits;
pub mod imagery;
pub mod statlab;
pub mod stego;

pub use bits::BitSeq;
