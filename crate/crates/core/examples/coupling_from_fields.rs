//! Linear and quadratic coupling of a target mode from sampled field
//! files, with the per-partner breakdown of the quadratic coefficient.
//!
//! ```text
//! cargo run --example write_sample_fields
//! cargo run --example coupling_from_fields -- [device.toml]
//! ```

use std::path::PathBuf;

use omx::config::DeviceConfig;
use omx::coupling::{g2_total, parity_allows_coupling};
use omx::units::{g1_to_hz_per_nm, g2_to_hz_per_nm2, to_hz};

fn main() -> omx::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/paddle/device.toml"));
    let cfg = DeviceConfig::load(&path)?;
    let mech = cfg.mechanical_mode()?;
    let contrast = cfg.contrast()?;
    let (modes, target) = cfg.load_modes()?;
    let t = &modes[target];

    println!("target {} at {:.3} THz, mechanical mode {}", t.label, to_hz(t.omega) / 1e12, mech.label);
    let r = g2_total(&modes, t, &mech, &contrast)?;
    for (other, (label, g)) in modes.iter().filter(|m| m.label != t.label).zip(&r.g2_contributions) {
        let allowed = parity_allows_coupling(t, other, &mech);
        println!(
            "  {label:<8} {:>+14.4e} Hz/nm^2  {}",
            g2_to_hz_per_nm2(*g),
            if allowed { "allowed" } else { "parity-forbidden" }
        );
    }
    println!("self term      {:+.4e} Hz/nm^2", g2_to_hz_per_nm2(r.g2_self));
    println!("g1/2pi         {:+.4e} Hz/nm", g1_to_hz_per_nm(r.g1));
    println!("g2/2pi total   {:+.4e} Hz/nm^2", g2_to_hz_per_nm2(r.g2_total));
    println!("delta_omega0   {:.4e} Hz", to_hz(r.delta_omega0));
    Ok(())
}
