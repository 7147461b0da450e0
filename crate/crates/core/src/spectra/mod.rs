//! Thermal occupation, `x²` power spectral densities, the cavity
//! transmission model and the detected nonlinear optical PSD.
//!
//! Spectra are two-sided in angular frequency and normalized so that
//! `∫ S(ω) dω/2π` is the variance (units per Hz).

mod cavity;
mod detection;
mod series;
mod sxx2;
mod thermal;

pub use cavity::{
    transduction, transmission, transmission_derivatives, CavityTransmission,
    TransductionCoefficients,
};
pub use detection::{detected_psd, detuning_sweep, noise_floor};
pub use series::{default_axis, linear_axis, PsdUnits, Sidedness, SpectrumSeries};
pub use sxx2::{sxx2_classical, sxx2_quantum, sxx2_quantum_at};
pub use thermal::{thermal_occupation, ThermalState};
