//! Figures of merit for QND phonon measurements.
//!
//! The thermal decoherence lifetime and the readout frequency-noise PSD are
//! inputs: they depend on the bath and detection chain, which this crate
//! does not model.

use crate::fieldio::MechanicalMode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QndInputs {
    /// Single-photon to two-phonon coupling rate [rad/s].
    pub delta_omega0: f64,
    /// Ground-state thermal decoherence lifetime [s].
    pub tau_tot: f64,
    /// Frequency-noise PSD of the readout [rad²/s].
    pub s_omega: f64,
    /// Bath occupation during the measurement.
    pub nbar_bath: f64,
    /// Coherent drive occupation.
    pub n_drive: f64,
}

impl QndInputs {
    pub fn new(
        delta_omega0: f64,
        tau_tot: f64,
        s_omega: f64,
        nbar_bath: f64,
        n_drive: f64,
    ) -> Result<Self> {
        let positive = [("delta_omega0", delta_omega0), ("tau_tot", tau_tot), ("s_omega", s_omega)];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::invalid("QND input", format!("{name} must be positive, got {v}")));
            }
        }
        for (name, v) in [("nbar_bath", nbar_bath), ("n_drive", n_drive)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::invalid("QND input", format!("{name} must be >= 0, got {v}")));
            }
        }
        Ok(Self {
            delta_omega0,
            tau_tot,
            s_omega,
            nbar_bath,
            n_drive,
        })
    }
}

/// Quantum-jump SNR `Σ⁽⁰⁾ = τ Δω₀² / S_ω`.
pub fn quantum_jump_snr(inputs: &QndInputs) -> f64 {
    inputs.tau_tot * inputs.delta_omega0 * inputs.delta_omega0 / inputs.s_omega
}

/// Drive amplitude in phonons, `n_d = (x_drive / 2x_zpf)²`.
pub fn drive_occupation(x_drive: f64, mech: &MechanicalMode) -> Result<f64> {
    if !(x_drive >= 0.0) {
        return Err(Error::invalid("drive amplitude", format!("{x_drive} < 0")));
    }
    let r = x_drive / (2.0 * mech.x_zpf());
    Ok(r * r)
}

/// Phonon shot-noise SNR `8 n_d n̄ Σ⁽⁰⁾`.
pub fn shot_noise_snr(inputs: &QndInputs) -> f64 {
    8.0 * inputs.n_drive * inputs.nbar_bath * quantum_jump_snr(inputs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fieldio::Parity;
    use std::f64::consts::TAU;

    fn p3() -> MechanicalMode {
        MechanicalMode::new("S-p3", TAU * 217e6, 314e-18, 1e5, Parity::new(-1, 1, 1).unwrap()).unwrap()
    }

    #[test]
    fn identity_snr() {
        let i = QndInputs::new(1.0, 1.0, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(quantum_jump_snr(&i), 1.0);
        let j = QndInputs { delta_omega0: 2.0, ..i };
        assert_eq!(quantum_jump_snr(&j), 4.0);
    }

    #[test]
    fn reproduces_quoted_sigma() {
        let i = QndInputs::new(0.3, 2.0, 2.0 * 0.09 / 6.4e-8, 0.25, 7.8e6).unwrap();
        assert!((quantum_jump_snr(&i) / 6.4e-8 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn drive_occupation_values() {
        let m = p3();
        assert!((m.x_zpf() / 1.11e-14 - 1.0).abs() < 0.01);
        assert!((drive_occupation(2.0 * m.x_zpf(), &m).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(drive_occupation(0.0, &m).unwrap(), 0.0);
        let nd = drive_occupation(62e-12, &m).unwrap();
        assert!((nd / 7.8e6 - 1.0).abs() < 0.03, "{nd}");
        assert!(drive_occupation(-1.0, &m).is_err());
        let a = drive_occupation(1e-12, &m).unwrap();
        assert!((drive_occupation(3e-12, &m).unwrap() / a - 9.0).abs() < 1e-12);
    }

    #[test]
    fn shot_noise_composition() {
        let i = QndInputs::new(1.0, 6.4e-8, 1.0, 0.25, 7.8e6).unwrap();
        let s = shot_noise_snr(&i);
        assert!((s - 0.9984).abs() < 1e-12);
        assert_eq!(s, 8.0 * i.n_drive * i.nbar_bath * quantum_jump_snr(&i));
        assert_eq!(shot_noise_snr(&QndInputs { n_drive: 0.0, ..i }), 0.0);
        let d = shot_noise_snr(&QndInputs { n_drive: 2.0 * i.n_drive, ..i });
        assert!((d / s - 2.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_invalid_inputs() {
        assert!(QndInputs::new(0.0, 1.0, 1.0, 0.0, 0.0).is_err());
        assert!(QndInputs::new(1.0, 1.0, 1.0, -0.1, 0.0).is_err());
    }
}
