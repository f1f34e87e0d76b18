//! Context-autoencoder pretraining lab.
//!
//! An encoder-regressor-decoder masked-image-modeling stack built on a small
//! self-contained reverse-mode autodiff core, together with block-wise mask
//! sampling, a k-means patch tokenizer, AdamW/LARS training, and probing /
//! reconstruction diagnostics. Everything runs on CPU at desk scale and is
//! deterministic given a seed.

pub mod caemodel;
pub mod dataio;
pub mod error;
pub mod evaluation;
pub mod masking;
pub mod ndcore;
pub mod parallel;
pub mod rngutil;
pub mod targets;
pub mod training;
pub mod vitblocks;

pub use error::{Error, Result};
