//! Recovers the quadratic coupling from a frequency-versus-displacement
//! sweep, first noiseless and then with multiplicative noise.

use std::f64::consts::TAU;

use omx::coupling::fit_g2_from_sweep;
use omx::units::{g2_from_hz_per_nm2, g2_to_hz_per_nm2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> omx::Result<()> {
    let g2 = g2_from_hz_per_nm2(400e6);
    let omega0 = TAU * 191e12;
    let xs: Vec<f64> = (-8..=8).map(|i| i as f64 * 0.25e-9).collect();

    let exact: Vec<(f64, f64)> = xs.iter().map(|&x| (x, omega0 + 0.5 * g2 * x * x)).collect();
    let fit = fit_g2_from_sweep(&exact, 2e-9)?;
    println!(
        "noiseless: g2/2pi = {:.9e} Hz/nm^2, rms residual {:.2e} rad/s",
        g2_to_hz_per_nm2(fit.g2),
        fit.rms_residual
    );

    let mut rng = ChaCha8Rng::seed_from_u64(omx::cli::DEFAULT_SEED);
    for level in [0.01, 0.05, 0.2] {
        let noisy: Vec<(f64, f64)> = xs
            .iter()
            .map(|&x| (x, omega0 + 0.5 * g2 * x * x * (1.0 + level * rng.random_range(-1.0..=1.0))))
            .collect();
        let f = fit_g2_from_sweep(&noisy, 2e-9)?;
        println!(
            "noise {:>4.0}%: g2/2pi = {:.4e} Hz/nm^2 ({:+.2}%)",
            level * 100.0,
            g2_to_hz_per_nm2(f.g2),
            (f.g2 / g2 - 1.0) * 100.0
        );
    }
    Ok(())
}
