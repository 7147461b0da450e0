//! Detected signal at `2ω_m` versus laser detuning for pure quadratic
//! coupling and with a parasitic linear coupling.

use omx::golden::shipped_config;
use omx::spectra::{detuning_sweep, linear_axis, thermal_occupation, transduction};
use omx::units::{g1_from_hz_per_nm, g2_from_hz_per_nm2};

fn main() -> omx::Result<()> {
    let cfg = shipped_config("p2")?;
    let mech = cfg.mechanical_mode()?;
    let cav = cfg.cavity()?;
    let env = cfg.environment()?;
    let state = thermal_occupation(&mech, env.temperature_k)?;
    let g2 = g2_from_hz_per_nm2(400e6);
    let k = cav.kappa;
    let deltas = linear_axis(-1.5 * k, 1.5 * k, 13)?;

    println!("{:>8} {:>14} {:>14} {:>14}", "delta/k", "g1 = 0", "g1 = 5 MHz/nm", "g1 = 50 MHz/nm");
    let sweeps: Vec<Vec<(f64, f64)>> = [0.0, 5e6, 50e6]
        .iter()
        .map(|&g1| detuning_sweep(g1_from_hz_per_nm(g1), g2, &cav, &mech, &state, env.power_w, &deltas))
        .collect::<omx::Result<_>>()?;
    for i in 0..deltas.len() {
        println!(
            "{:>8.2} {:>14.4e} {:>14.4e} {:>14.4e}",
            deltas[i] / k,
            sweeps[0][i].1,
            sweeps[1][i].1,
            sweeps[2][i].1
        );
    }

    let c = transduction(g1_from_hz_per_nm(50e6), g2, &cav, 0.5 * k);
    println!(
        "\nat delta = kappa/2: nonlinear coupling term / nonlinear transduction term = {:.1}",
        (c.term_nonlinear_coupling / c.term_nonlinear_transduction).abs()
    );
    println!("max-slope detuning kappa/(2 sqrt 3) = {:.4e} rad/s", cav.max_slope_detuning());
    Ok(())
}
