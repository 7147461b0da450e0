//! Time-domain thermal oscillator and `x²` periodogram estimator.
//!
//! The oscillator obeys `m ẍ = −m ω_m² x − m Γ ẋ + F(t)` with white
//! Gaussian force noise of two-sided PSD `S_FF = 2 k_B T m Γ`. This is the
//! fluctuation-dissipation calibration: its one-sided form
//! `2 S_FF = 4 k_B T m Γ` is the usual thermal force density, and the
//! stationary state satisfies equipartition, `⟨x²⟩ = k_B T / (m ω_m²)`.

mod periodogram;
mod simulate;

pub use periodogram::periodogram_x2;
pub use simulate::{simulate, SimulationConfig, Trajectory};
