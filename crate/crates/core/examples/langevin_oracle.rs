//! Thermally driven oscillator simulated in the time domain, with the
//! segment-averaged `x²` periodogram compared against the analytic spectra
//! near `2ω_m`.
//!
//! ```text
//! cargo run --release --example langevin_oracle -- [log2_segment_len] [segments] [seed]
//! ```

use omx::golden::{langevin_band_means, langevin_config};

fn main() -> omx::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let log2_len = args.first().copied().unwrap_or(20);
    let segments = args.get(1).copied().unwrap_or(64) as usize;
    let seed = args.get(2).copied().unwrap_or(omx::cli::DEFAULT_SEED);

    let mut config = langevin_config(seed)?;
    config.n_segments = segments;
    config.n_steps = segments << log2_len;
    println!(
        "f_m = {:.3e} Hz, Q_m = {}, T = {} K, dt*w_m = {:.3}, {} segments of 2^{}",
        omx::units::to_hz(config.mech.omega_m),
        config.mech.q_mech,
        config.temperature,
        config.dt * config.mech.omega_m,
        segments,
        log2_len
    );
    let (sim, classical, quantum) = langevin_band_means(&config)?;
    println!("band mean |w - 2w_m| <= Gamma:");
    println!("  simulated       {sim:.4e} m^4/Hz");
    println!("  quantum form    {quantum:.4e} m^4/Hz  (sim/quantum   = {:.4})", sim / quantum);
    println!("  classical form  {classical:.4e} m^4/Hz  (sim/classical = {:.4})", sim / classical);
    Ok(())
}
