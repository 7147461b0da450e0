//! Thermal `x²` spectra: occupations, the three Lorentzian lines and their
//! total area, and the classical thermal-kick form near `2ω_m`.

use std::f64::consts::TAU;

use omx::fieldio::{MechanicalMode, Parity};
use omx::golden::sum_rule_axis;
use omx::spectra::{sxx2_classical, sxx2_quantum, sxx2_quantum_at, thermal_occupation, ThermalState};

fn main() -> omx::Result<()> {
    let mech = MechanicalMode::new("S", TAU * 5.5e6, 450e-18, 1e3, Parity::new(-1, 1, 1)?)?;
    let wm2 = 2.0 * mech.omega_m;

    for t in [0.01, 4.0, 300.0] {
        println!("T = {t:>6} K  nbar = {:.4e}", thermal_occupation(&mech, t)?.nbar);
    }

    let axis = sum_rule_axis(&mech)?;
    println!("\nnbar        S(+2wm)/S(-2wm)   area / 3(2nbar+1)^2 x_zpf^4");
    for nbar in [0.0, 1.0, 1e3, 1e6] {
        let s = ThermalState::from_occupation(&mech, nbar)?;
        let asym = sxx2_quantum_at(&mech, &s, wm2) / sxx2_quantum_at(&mech, &s, -wm2);
        let area = sxx2_quantum(&mech, &s, &axis)?.integrate();
        let expected = 3.0 * (2.0 * nbar + 1.0).powi(2) * mech.x_zpf().powi(4);
        println!("{nbar:<10.0e} {asym:>16.4e}   {:.6}", area / expected);
    }

    let state = thermal_occupation(&mech, 300.0)?;
    let g = mech.gamma();
    println!("\nat 300 K, offset from 2wm in units of Gamma:");
    for k in [-5.0, -1.0, 0.0, 1.0, 5.0] {
        let w = [wm2 + k * g];
        let q = sxx2_quantum(&mech, &state, &w)?.values[0];
        let c = sxx2_classical(&mech, 300.0, &w)?.values[0];
        println!("  {k:>+4.0}  quantum {q:.4e}  classical {c:.4e}  ratio {:.4}", c / q);
    }
    Ok(())
}
