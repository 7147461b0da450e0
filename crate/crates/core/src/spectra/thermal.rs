use crate::constants::{HBAR, K_B};
use crate::fieldio::MechanicalMode;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalState {
    /// Bath temperature [K].
    pub temperature: f64,
    /// Mean phonon occupation.
    pub nbar: f64,
}

impl ThermalState {
    /// State with a prescribed occupation; the temperature is the one that
    /// yields it (`0 K` for `nbar = 0`).
    pub fn from_occupation(mech: &MechanicalMode, nbar: f64) -> Result<Self> {
        if !(nbar >= 0.0) || !nbar.is_finite() {
            return Err(Error::invalid("thermal state", format!("occupation {nbar} < 0")));
        }
        let temperature = if nbar == 0.0 {
            0.0
        } else {
            HBAR * mech.omega_m / (K_B * (1.0 / nbar).ln_1p())
        };
        Ok(Self { temperature, nbar })
    }
}

/// Bose-Einstein occupation `1/(exp(ħω_m/k_B T) − 1)`.
pub fn thermal_occupation(mech: &MechanicalMode, temperature: f64) -> Result<ThermalState> {
    if !(temperature > 0.0) {
        return Err(Error::invalid(
            "temperature",
            format!("must be positive, got {temperature}"),
        ));
    }
    let x = HBAR * mech.omega_m / (K_B * temperature);
    Ok(ThermalState {
        temperature,
        nbar: 1.0 / x.exp_m1(),
    })
}
