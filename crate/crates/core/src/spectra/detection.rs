use super::series::{PsdUnits, SpectrumSeries};
use super::{sxx2_quantum_at, transduction, CavityTransmission, ThermalState};
use crate::fieldio::MechanicalMode;
use crate::{Error, Result};

/// Detected optical PSD from `x²` transduction, `¼ P_i² G₂² S_x²(ω)` [W²/Hz].
pub fn detected_psd(
    p_in: f64,
    coeffs: &super::TransductionCoefficients,
    sxx2: &SpectrumSeries,
) -> Result<SpectrumSeries> {
    if !(p_in > 0.0) {
        return Err(Error::invalid("input power", format!("must be positive, got {p_in}")));
    }
    let gain = 0.25 * p_in * p_in * coeffs.g2 * coeffs.g2;
    Ok(SpectrumSeries {
        omega_axis: sxx2.omega_axis.clone(),
        values: sxx2.values.iter().map(|s| gain * s).collect(),
        units: PsdUnits::WattsSquaredPerHz,
        sidedness: sxx2.sidedness,
    })
}

/// Flat detector floor `NEP²` [W²/Hz].
pub fn noise_floor(nep: f64) -> Result<f64> {
    if !(nep > 0.0) {
        return Err(Error::invalid("NEP", format!("must be positive, got {nep}")));
    }
    Ok(nep * nep)
}

/// Detected PSD at `ω = 2ω_m` for each detuning.
#[allow(clippy::too_many_arguments)]
pub fn detuning_sweep(
    g1: f64,
    g2: f64,
    cavity: &CavityTransmission,
    mech: &MechanicalMode,
    state: &ThermalState,
    p_in: f64,
    deltas: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if deltas.is_empty() {
        return Err(Error::invalid("detuning sweep", "no detunings given"));
    }
    if !(p_in > 0.0) {
        return Err(Error::invalid("input power", format!("must be positive, got {p_in}")));
    }
    cavity.check_sideband_unresolved(mech.omega_m);
    let s = sxx2_quantum_at(mech, state, 2.0 * mech.omega_m);
    Ok(deltas
        .iter()
        .map(|&d| {
            let c = transduction(g1, g2, cavity, d);
            (d, 0.25 * p_in * p_in * c.g2 * c.g2 * s)
        })
        .collect())
}
