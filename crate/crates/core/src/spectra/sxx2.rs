use log::warn;

use super::series::{check_axis, PsdUnits, SpectrumSeries};
use super::ThermalState;
use crate::constants::K_B;
use crate::fieldio::MechanicalMode;
use crate::Result;

/// Quantum `S_x²(ω)` of a thermal state at a single frequency.
///
/// Three Lorentzians of half-width `Γ`: anti-Stokes-like at `+2ω_m` with
/// weight `2(n̄+1)²`, at `−2ω_m` with weight `2n̄²`, and at DC with weight
/// `8n̄(n̄+1)+1`, each times `2 x_zpf⁴ Γ / (Γ² + δ²)`.
pub fn sxx2_quantum_at(mech: &MechanicalMode, state: &ThermalState, omega: f64) -> f64 {
    let g = mech.gamma();
    let x2 = mech.x_zpf() * mech.x_zpf();
    let n = state.nbar;
    let wm2 = 2.0 * mech.omega_m;
    let lorentz = |d: f64| g / (g * g + d * d);
    2.0 * x2
        * x2
        * (2.0 * (n + 1.0) * (n + 1.0) * lorentz(omega - wm2)
            + 2.0 * n * n * lorentz(omega + wm2)
            + (8.0 * n * (n + 1.0) + 1.0) * lorentz(omega))
}

pub fn sxx2_quantum(
    mech: &MechanicalMode,
    state: &ThermalState,
    omega_axis: &[f64],
) -> Result<SpectrumSeries> {
    check_axis(omega_axis)?;
    if mech.q_mech < 10.0 {
        warn!(
            "Q_m = {} is not in the high-Q regime the Lorentzian spectrum assumes",
            mech.q_mech
        );
    }
    let values = omega_axis
        .iter()
        .map(|&w| sxx2_quantum_at(mech, state, w))
        .collect();
    Ok(SpectrumSeries::new(
        omega_axis.to_vec(),
        values,
        PsdUnits::MetersFourthPerHz,
    ))
}

/// Classical thermal-kick `S_x²(ω)`:
///
/// ```text
/// 96 (k_B T/m)² (ω_m/Q_m) / ([(ω² − 4ω_m²)² + (2ω_m ω/Q_m)²] [ω² + (ω_m/2Q_m)²])
/// ```
///
/// Intended for `n̄ ≫ 1`.
pub fn sxx2_classical(
    mech: &MechanicalMode,
    temperature: f64,
    omega_axis: &[f64],
) -> Result<SpectrumSeries> {
    check_axis(omega_axis)?;
    let (wm, qm) = (mech.omega_m, mech.q_mech);
    let kt_m = K_B * temperature / mech.mass;
    let prefactor = 96.0 * kt_m * kt_m * wm / qm;
    let values = omega_axis
        .iter()
        .map(|&w| {
            let a = w * w - 4.0 * wm * wm;
            let b = 2.0 * wm * w / qm;
            let c = wm / (2.0 * qm);
            prefactor / ((a * a + b * b) * (w * w + c * c))
        })
        .collect();
    Ok(SpectrumSeries::new(
        omega_axis.to_vec(),
        values,
        PsdUnits::MetersFourthPerHz,
    ))
}
