//! Detected optical PSD of the shipped p1 and p2 devices at `Δ = κ/2`,
//! against the detector floor, written as CSV next to a summary.
//!
//! ```text
//! cargo run --example detected_psd -- [output_dir]
//! ```

use std::path::PathBuf;

use omx::cli::{spectrum_csv, SpectrumArgs};
use omx::golden::shipped_config;
use omx::output::write_atomic;
use omx::spectra::{detected_psd, noise_floor, sxx2_quantum, thermal_occupation, transduction};

fn main() -> omx::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    for name in ["p1", "p2"] {
        let cfg = shipped_config(name)?;
        let mech = cfg.mechanical_mode()?;
        let cav = cfg.cavity()?;
        let env = cfg.environment()?;
        let (g1, g2) = cfg.coupling_values()?;
        let state = thermal_occupation(&mech, env.temperature_k)?;
        let c = transduction(g1, g2, &cav, 0.5 * cav.kappa);
        let axis = [0.0, 2.0 * mech.omega_m];
        let sp = detected_psd(env.power_w, &c, &sxx2_quantum(&mech, &state, &axis)?)?;
        let floor = noise_floor(env.nep_w_per_rthz)?;
        println!(
            "{name}: S_P(0) = {:.3e}, S_P(2wm) = {:.3e} W^2/Hz, floor {:.3e} ({:.1} dB above)",
            sp.values[0],
            sp.values[1],
            floor,
            10.0 * (sp.values[1] / floor).log10()
        );
        if let Some(dir) = &out {
            let csv = spectrum_csv(&cfg, &SpectrumArgs::new(format!("{name}.toml")))?;
            write_atomic(dir.join(format!("fig3a_{name}.csv")), &csv)?;
        }
    }
    Ok(())
}
