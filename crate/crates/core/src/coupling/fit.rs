use crate::sum::pairwise_sum;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepFit {
    /// [rad/s per m²]
    pub g2: f64,
    /// Frequency at zero displacement [rad/s].
    pub omega0: f64,
    /// RMS of the fit residuals [rad/s].
    pub rms_residual: f64,
}

/// Least-squares fit of `ω(x) = ω0 + ½ g2 x²` to a displacement sweep.
///
/// Only samples with `|x| <= max_abs_x` are used. The model has no linear
/// term and is linear in `(ω0, g2)`, so the fit is a closed-form regression
/// on `u = x²/2`.
pub fn fit_g2_from_sweep(samples: &[(f64, f64)], max_abs_x: f64) -> Result<SweepFit> {
    let used: Vec<(f64, f64)> = samples
        .iter()
        .copied()
        .filter(|(x, _)| x.abs() <= max_abs_x)
        .collect();
    if used.len() < 3 {
        return Err(Error::Fit(format!(
            "need at least 3 samples with |x| <= {max_abs_x:e}, got {}",
            used.len()
        )));
    }
    let n = used.len() as f64;
    let u: Vec<f64> = used.iter().map(|(x, _)| 0.5 * x * x).collect();
    let y: Vec<f64> = used.iter().map(|(_, w)| *w).collect();
    let u_mean = pairwise_sum(&u) / n;
    // Shift by the first sample before averaging to keep the small
    // displacement-induced changes well resolved.
    let y_ref = y[0];
    let dy: Vec<f64> = y.iter().map(|w| w - y_ref).collect();
    let dy_mean = pairwise_sum(&dy) / n;

    let du: Vec<f64> = u.iter().map(|v| v - u_mean).collect();
    let suu = pairwise_sum(&du.iter().map(|d| d * d).collect::<Vec<_>>());
    let max_u = u.iter().fold(0.0f64, |m, v| m.max(*v));
    if !(suu > 1e-24 * max_u * max_u * n) {
        return Err(Error::Fit(
            "samples need at least two distinct |x| values".into(),
        ));
    }
    let suy = pairwise_sum(
        &du.iter()
            .zip(&dy)
            .map(|(a, b)| a * (b - dy_mean))
            .collect::<Vec<_>>(),
    );
    let g2 = suy / suu;
    let intercept = dy_mean - g2 * u_mean;
    let residuals: Vec<f64> = u
        .iter()
        .zip(&dy)
        .map(|(ui, di)| {
            let r = di - (intercept + g2 * ui);
            r * r
        })
        .collect();
    Ok(SweepFit {
        g2,
        omega0: y_ref + intercept,
        rms_residual: (pairwise_sum(&residuals) / n).sqrt(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::g2_from_hz_per_nm2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const NM: f64 = 1e-9;

    fn parabola(g2: f64, w0: f64, xs: &[f64]) -> Vec<(f64, f64)> {
        xs.iter().map(|&x| (x, w0 + 0.5 * g2 * x * x)).collect()
    }

    #[test]
    fn recovers_exact_parabola() {
        let g2 = g2_from_hz_per_nm2(400e6);
        let w0 = std::f64::consts::TAU * 191e12;
        let xs: Vec<f64> = [-2.0, -1.0, 0.0, 1.0, 2.0].iter().map(|v| v * NM).collect();
        let fit = fit_g2_from_sweep(&parabola(g2, w0, &xs), 2.0 * NM).unwrap();
        assert!((fit.g2 / g2 - 1.0).abs() < 1e-9);
        assert!((fit.omega0 / w0 - 1.0).abs() < 1e-15);
        assert!(fit.rms_residual < 1e-6 * 0.5 * g2 * (2.0 * NM).powi(2));
    }

    #[test]
    fn constant_samples_give_zero() {
        let s = [(-1e-9, 5.0), (0.0, 5.0), (1e-9, 5.0), (2e-9, 5.0)];
        let fit = fit_g2_from_sweep(&s, 1.0).unwrap();
        assert_eq!(fit.g2, 0.0);
        assert_eq!(fit.omega0, 5.0);
        assert_eq!(fit.rms_residual, 0.0);
    }

    #[test]
    fn window_excludes_large_displacements() {
        let g2 = 2.0;
        let mut s = parabola(g2, 1.0, &[-1.0, 0.0, 1.0, 0.5]);
        s.push((10.0, 1e9));
        let fit = fit_g2_from_sweep(&s, 1.0).unwrap();
        assert!((fit.g2 - g2).abs() < 1e-12);
    }

    #[test]
    fn insufficient_or_collinear_samples() {
        assert!(matches!(
            fit_g2_from_sweep(&[(0.0, 1.0), (1.0, 2.0)], 1.0),
            Err(Error::Fit(_))
        ));
        // Only one distinct |x|.
        assert!(matches!(
            fit_g2_from_sweep(&[(-1.0, 1.0), (1.0, 2.0), (1.0, 2.5)], 1.0),
            Err(Error::Fit(_))
        ));
        assert!(fit_g2_from_sweep(&[(0.0, 1.0), (5.0, 1.0), (6.0, 1.0)], 1.0).is_err());
    }

    #[test]
    fn uniform_noise_stays_in_band() {
        // Residual RMS is bounded by the noise amplitude; the slope error is
        // checked against its standard deviation δ/sqrt(3)/sqrt(Σ(u-ū)²).
        let g2 = 3.0;
        let delta = 0.05;
        let xs: Vec<f64> = (-10..=10).map(|i| i as f64 * 0.2).collect();
        let u: Vec<f64> = xs.iter().map(|x| 0.5 * x * x).collect();
        let u_mean = u.iter().sum::<f64>() / u.len() as f64;
        let suu: f64 = u.iter().map(|v| (v - u_mean).powi(2)).sum();
        let sigma = delta / 3f64.sqrt() / suu.sqrt();
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let s: Vec<(f64, f64)> = xs
                .iter()
                .map(|&x| (x, 0.5 * g2 * x * x + delta * rng.random_range(-1.0..1.0)))
                .collect();
            let fit = fit_g2_from_sweep(&s, 2.0).unwrap();
            assert!(fit.rms_residual <= delta);
            assert!((fit.g2 - g2).abs() < 4.5 * sigma, "seed {seed}: {}", fit.g2);
        }
    }
}
