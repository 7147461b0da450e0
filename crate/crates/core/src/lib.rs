//! Quadratic optomechanical coupling from discretized cavity mode fields.
//!
//! The crate evaluates first- and second-order optomechanical coupling
//! coefficients with moving-boundary perturbation theory, predicts the
//! thermally driven `x^2` readout spectra of a quadratically coupled
//! resonator, and estimates QND phonon-measurement signal-to-noise ratios.
//! A stochastic time-domain integrator provides an independent check on the
//! analytic spectra.
//!
//! Everything is strict SI internally (m, kg, rad/s, W). Conversions to
//! reporting units such as MHz/nm² happen only in [`units`] helpers used at
//! the output boundary.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory:
//!
//! ```text
//! cargo run --example coupling_from_fields
//! cargo run --example perturbation_oracle
//! cargo run --example fit_sweep
//! cargo run --example thermal_spectra
//! cargo run --example detected_psd
//! cargo run --example detuning_sweep
//! cargo run --release --example langevin_oracle
//! cargo run --example qnd_snr
//! cargo run --example write_sample_fields
//! ```

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod config;
pub mod constants;
pub mod coupling;
mod error;
pub mod fieldio;
pub mod golden;
pub mod langevin;
pub mod output;
pub mod qnd;
pub mod spectra;
pub mod sum;
pub mod synthetic;
pub mod units;

pub use error::{Error, Result};
