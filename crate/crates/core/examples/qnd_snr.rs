//! QND phonon-measurement figures of merit for the cryogenic p3 device.

use std::f64::consts::TAU;

use omx::cli::config_delta_omega0_hz;
use omx::golden::shipped_config;
use omx::qnd::{drive_occupation, quantum_jump_snr, shot_noise_snr, QndInputs};
use omx::spectra::thermal_occupation;

fn main() -> omx::Result<()> {
    let cfg = shipped_config("p3")?;
    let mech = cfg.mechanical_mode()?;
    let dw_hz = config_delta_omega0_hz(&cfg)?;
    let nbar = thermal_occupation(&mech, cfg.environment()?.temperature_k)?.nbar;
    println!("x_zpf = {:.4e} m, delta_omega0/2pi = {dw_hz:.4e} Hz, nbar(10 mK) = {nbar:.3}", mech.x_zpf());

    // Lifetime and readout noise are inputs; pick them to give the quoted Σ⁽⁰⁾.
    let dw = TAU * dw_hz;
    let tau = 1.0;
    let s_omega = tau * dw * dw / 6.4e-8;
    for x_pm in [10.0, 31.0, 62.0, 124.0] {
        let nd = drive_occupation(x_pm * 1e-12, &mech)?;
        let inputs = QndInputs::new(dw, tau, s_omega, 0.25, nd)?;
        println!(
            "drive {x_pm:>5} pm  n_d = {nd:.3e}  Sigma0 = {:.2e}  S = {:.4}",
            quantum_jump_snr(&inputs),
            shot_noise_snr(&inputs)
        );
    }
    Ok(())
}
