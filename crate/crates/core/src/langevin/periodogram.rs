use std::f64::consts::TAU;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use super::Trajectory;
use crate::spectra::{PsdUnits, SpectrumSeries};
use crate::{Error, Result};

const MIN_PERIODS_PER_SEGMENT: f64 = 10.0;

/// Segment-averaged two-sided periodogram of `x²(t)`.
///
/// The trajectory is cut into `n_segments` non-overlapping blocks (a
/// trailing remainder is dropped). Each block has its own mean removed and
/// is transformed with a rectangular window; the estimate is
/// `dt/L · |X_k|²` averaged over blocks, on the axis `2πk/(L dt)` for
/// `k = −L/2 .. L/2 − 1`. With this scaling `Σ_k S_k · 1/(L dt)` equals the
/// mean per-segment variance of `x²`.
pub fn periodogram_x2(traj: &Trajectory, n_segments: usize) -> Result<SpectrumSeries> {
    if n_segments == 0 {
        return Err(Error::invalid("periodogram", "need at least one segment"));
    }
    let len = traj.len() / n_segments;
    if len < 16 {
        return Err(Error::invalid(
            "periodogram",
            format!("{} samples are too few for {n_segments} segments", traj.len()),
        ));
    }
    let span = len as f64 * traj.dt;
    if let Some(wm) = traj.omega_m {
        let periods = span * wm / TAU;
        if periods < MIN_PERIODS_PER_SEGMENT {
            return Err(Error::invalid(
                "periodogram",
                format!("segments span {periods:.1} mechanical periods (< 10)"),
            ));
        }
    }

    let fft = FftPlanner::<f64>::new().plan_fft_forward(len);
    let mut acc = vec![0.0; len];
    let mut buf = vec![Complex::new(0.0, 0.0); len];
    for seg in traj.positions.chunks_exact(len).take(n_segments) {
        let mean = seg.iter().map(|x| x * x).sum::<f64>() / len as f64;
        for (b, x) in buf.iter_mut().zip(seg) {
            *b = Complex::new(x * x - mean, 0.0);
        }
        fft.process(&mut buf);
        for (a, b) in acc.iter_mut().zip(&buf) {
            *a += b.norm_sqr();
        }
    }

    let scale = traj.dt / (len as f64 * n_segments as f64);
    let half = len / 2;
    // Reorder to ascending frequency: bins L/2.. are the negative ones.
    let order = (half..len).chain(0..half);
    let (omega_axis, values) = order
        .map(|i| {
            let k = if i >= half { i as f64 - len as f64 } else { i as f64 };
            (TAU * k / span, acc[i] * scale)
        })
        .unzip();
    Ok(SpectrumSeries {
        omega_axis,
        values,
        units: PsdUnits::MetersFourthPerHz,
        sidedness: crate::spectra::Sidedness::TwoSided,
    })
}
