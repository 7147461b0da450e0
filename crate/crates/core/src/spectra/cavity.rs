use log::warn;

use crate::{Error, Result};

/// Side-coupled Lorentzian dip `T(Δ) = 1 − (1 − T_o)/(1 + (2Δ/κ)²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityTransmission {
    /// [rad/s]
    pub omega_o: f64,
    /// Full linewidth `ω_o / Q_o` [rad/s].
    pub kappa: f64,
    /// On-resonance transmission `T_o`.
    pub t_floor: f64,
}

impl CavityTransmission {
    pub fn new(omega_o: f64, q_optical: f64, t_floor: f64) -> Result<Self> {
        if !(omega_o > 0.0 && q_optical > 0.0) {
            return Err(Error::invalid(
                "cavity",
                format!("omega_o and Q_o must be positive ({omega_o}, {q_optical})"),
            ));
        }
        if !(0.0..=1.0).contains(&t_floor) {
            return Err(Error::invalid(
                "cavity",
                format!("on-resonance transmission {t_floor} outside [0, 1]"),
            ));
        }
        Ok(Self {
            omega_o,
            kappa: omega_o / q_optical,
            t_floor,
        })
    }

    /// Detuning of the steepest slope, `κ/(2√3)`, where the curvature
    /// vanishes.
    pub fn max_slope_detuning(&self) -> f64 {
        self.kappa / (2.0 * 3f64.sqrt())
    }

    /// Warns when `ω_m` is not small against `κ`.
    pub fn check_sideband_unresolved(&self, omega_m: f64) {
        if omega_m > 0.1 * self.kappa {
            warn!(
                "omega_m = {omega_m:e} rad/s is not << kappa = {:e} rad/s; the quasi-static \
                 transmission model assumes the sideband-unresolved regime",
                self.kappa
            );
        }
    }
}

pub fn transmission(cavity: &CavityTransmission, delta: f64) -> f64 {
    let u = 2.0 * delta / cavity.kappa;
    1.0 - (1.0 - cavity.t_floor) / (1.0 + u * u)
}

/// `(dT/dΔ [s], d²T/dΔ² [s²])` of the Lorentzian dip.
pub fn transmission_derivatives(cavity: &CavityTransmission, delta: f64) -> (f64, f64) {
    let depth = 1.0 - cavity.t_floor;
    let k = cavity.kappa;
    let u = 2.0 * delta / k;
    let p = 1.0 + u * u;
    let slope = depth * (8.0 * delta / (k * k)) / (p * p);
    let curvature = depth * (8.0 / (k * k)) * (1.0 - 3.0 * u * u) / (p * p * p);
    (slope, curvature)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransductionCoefficients {
    /// `dT/dx` [1/m]
    pub g1: f64,
    /// `d²T/dx²` [1/m²]
    pub g2: f64,
    /// `g⁽²⁾ dT/dΔ`
    pub term_nonlinear_coupling: f64,
    /// `(g⁽¹⁾)² d²T/dΔ²`
    pub term_nonlinear_transduction: f64,
}

/// Transmission gradients with respect to displacement, keeping the
/// nonlinear-coupling and nonlinear-transduction parts of `G2` separate.
pub fn transduction(
    g1: f64,
    g2: f64,
    cavity: &CavityTransmission,
    delta: f64,
) -> TransductionCoefficients {
    let (slope, curvature) = transmission_derivatives(cavity, delta);
    let term_nonlinear_coupling = g2 * slope;
    let term_nonlinear_transduction = g1 * g1 * curvature;
    TransductionCoefficients {
        g1: g1 * slope,
        g2: term_nonlinear_coupling + term_nonlinear_transduction,
        term_nonlinear_coupling,
        term_nonlinear_transduction,
    }
}
