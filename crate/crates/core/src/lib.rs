//! RNN-transducer training and transfer-learning toolkit.
//!
//! The crate builds up from deterministic tensor arithmetic to a full
//! experiment harness:
//!
//! - [`numerics`]: tensors, seeded RNG, log-domain reductions, and the
//!   finite-difference gradient oracle.
//! - [`nn`]: LSTM-with-projection stacks, embedding/linear layers with
//!   hand-written backward passes, the Adam/SGD optimizer, and the
//!   checkpoint codec.
//! - [`tokenize`]: grapheme inventories with `B_` word-boundary prefixes
//!   and byte pair encoding for word pieces.
//! - [`data`]: log-Mel feature frontend, frame stacking, word-alignment
//!   splitting into frame-level targets, and the synthetic two-language
//!   corpus generator.
//! - [`transducer`]: joint network, the forward-backward transducer loss
//!   with analytic gradients, greedy and beam-search decoding.
//! - [`pretrain`]: frame-level cross-entropy encoder training and LSTM
//!   language-model training.
//! - [`transfer`]: the checkpoint transplant engine and the initialization
//!   strategies built on it.
//! - [`evalharness`]: WER/WERR scoring and the strategy-matrix experiment
//!   runner.

pub mod config;
pub mod data;
pub mod error;
pub mod evalharness;
pub mod nn;
pub mod numerics;
pub mod pretrain;
pub mod tokenize;
pub mod transducer;
pub mod transfer;

pub use error::{Error, Result};
