//! Minimal dense numerical kernel: matrices, small MLPs with exact
//! reverse-mode gradients, the Adam optimizer, and a seeded deterministic RNG.
//!
//! Everything runs in f64; 32-bit floats appear only at file boundaries.

mod adam;
mod matrix;
mod mlp;
mod rng;

pub use adam::{Adam, AdamState};
pub use matrix::Matrix;
pub use mlp::{Mlp, MlpCache, MlpGrads, OutputActivation};
pub use rng::Rng;
