//! Exact two-mode model used to check the second-order cross term.
//!
//! Two optical modes coupled by a displacement `x` are described by the
//! symmetric frequency-squared matrix
//!
//! ```text
//! [ ωa²   V  ]        V = 2 c x ωa^{3/2} / ωb^{1/2}
//! [ V    ωb² ]
//! ```
//!
//! where `c = sqrt(ωa ωb)/2 · ⟨Eb|δε/δx|Ea⟩ / sqrt(⟨Ea|ε|Ea⟩⟨Eb|ε|Eb⟩)` is
//! the cross coupling rate. Expanding the eigenvalue that starts at `ωa` to
//! second order in `x` reproduces the cross term, so its curvature at
//! `x = 0` is an independent check on the closed form.

use crate::fieldio::{mode_norm, DielectricContrast, MechanicalMode, OpticalMode};
use crate::{Error, Result};

use super::perturbation::{overlap_matrix_element, DEGENERACY_GUARD};

/// Finite-difference step as a fraction of the avoided-crossing scale.
const STEP_FRACTION: f64 = 1e-3;

fn check(omega_a: f64, omega_b: f64) -> Result<()> {
    if !(omega_a > 0.0 && omega_b > 0.0) {
        return Err(Error::invalid("two-mode oracle", "frequencies must be positive"));
    }
    if (omega_b - omega_a).abs() < DEGENERACY_GUARD * omega_a {
        return Err(Error::Degenerate { omega_a, omega_b });
    }
    Ok(())
}

fn off_diagonal_slope(omega_a: f64, omega_b: f64, coupling_rate: f64) -> f64 {
    2.0 * coupling_rate * omega_a.powf(1.5) / omega_b.sqrt()
}

/// Eigenvalue shifts `(λa − ωa², λb − ωb²)` computed without cancellation.
fn eigenvalue_shifts(omega_a: f64, omega_b: f64, v: f64) -> (f64, f64) {
    let d = 0.5 * (omega_b - omega_a) * (omega_b + omega_a);
    let r = d.hypot(v);
    let s = v * v / (d.abs() + r);
    if d > 0.0 {
        (-s, s)
    } else {
        (s, -s)
    }
}

fn frequency_shift(omega: f64, dlambda: f64) -> Result<f64> {
    let lambda = omega * omega + dlambda;
    if !(lambda > 0.0) {
        return Err(Error::invalid(
            "two-mode oracle",
            "displacement too large: eigenvalue is not positive",
        ));
    }
    Ok(dlambda / (omega + lambda.sqrt()))
}

/// Exact eigenfrequencies `(ωa(x), ωb(x))`, each branch tracked from its
/// uncoupled value.
pub fn two_mode_oracle(omega_a: f64, omega_b: f64, coupling_rate: f64, x: f64) -> Result<(f64, f64)> {
    check(omega_a, omega_b)?;
    let v = off_diagonal_slope(omega_a, omega_b, coupling_rate) * x;
    let (da, db) = eigenvalue_shifts(omega_a, omega_b, v);
    Ok((
        omega_a + frequency_shift(omega_a, da)?,
        omega_b + frequency_shift(omega_b, db)?,
    ))
}

/// `d²ωa/dx²` at `x = 0` by centered finite differences of the exact
/// branch, with one Richardson step (`h` and `h/2`). `h` is
/// `1e-3 · |ωb² − ωa²| / |dV/dx|`.
pub fn two_mode_curvature(omega_a: f64, omega_b: f64, coupling_rate: f64) -> Result<f64> {
    check(omega_a, omega_b)?;
    let k = off_diagonal_slope(omega_a, omega_b, coupling_rate);
    if k == 0.0 {
        return Ok(0.0);
    }
    let scale = ((omega_b - omega_a) * (omega_b + omega_a)).abs() / k.abs();
    let shift = |x: f64| -> Result<f64> {
        let (da, _) = eigenvalue_shifts(omega_a, omega_b, k * x);
        frequency_shift(omega_a, da)
    };
    let second_difference = |h: f64| -> Result<f64> { Ok((shift(h)? + shift(-h)?) / (h * h)) };
    let h = STEP_FRACTION * scale;
    let coarse = second_difference(h)?;
    let fine = second_difference(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Symmetric cross coupling rate `c` [rad/s per m] between two sampled
/// modes, the input expected by [`two_mode_oracle`].
pub fn cross_coupling_rate(
    mode_b: &OpticalMode,
    mode_a: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<f64> {
    let m = overlap_matrix_element(
        mode_b.boundary_for(&mech.label)?,
        mode_a.boundary_for(&mech.label)?,
        contrast,
    )?;
    let n = (mode_norm(mode_a)? * mode_norm(mode_b)?).sqrt();
    Ok(0.5 * (mode_a.omega * mode_b.omega).sqrt() * m / n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_displacement_is_exact() {
        let (a, b) = two_mode_oracle(1.2e15, 1.5e15, 3e20, 0.0).unwrap();
        assert_eq!(a, 1.2e15);
        assert_eq!(b, 1.5e15);
    }

    #[test]
    fn levels_repel() {
        let (a, b) = two_mode_oracle(1.0, 2.0, 0.1, 0.5).unwrap();
        assert!(a < 1.0 && b > 2.0);
    }

    #[test]
    fn swapping_modes_flips_curvature_sign() {
        let c = 1e20;
        let lo = two_mode_curvature(1.2e15, 1.4e15, c).unwrap();
        let hi = two_mode_curvature(1.4e15, 1.2e15, c).unwrap();
        assert!(lo < 0.0 && hi > 0.0);
    }

    #[test]
    fn curvature_matches_series_coefficient() {
        // Analytic second-order coefficient of the tracked branch:
        // d²ω/dx² = −k² / (ωa (ωb² − ωa²)).
        let (wa, wb, c): (f64, f64, f64) = (2.0, 3.0, 0.05);
        let k = 2.0 * c * wa.powf(1.5) / wb.sqrt();
        let expected = -k * k / (wa * (wb * wb - wa * wa));
        let got = two_mode_curvature(wa, wb, c).unwrap();
        assert!((got / expected - 1.0).abs() < 1e-9, "{got} vs {expected}");
    }

    #[test]
    fn rejects_degenerate_pairs() {
        assert!(matches!(
            two_mode_oracle(1.0, 1.0 + 1e-12, 1.0, 0.1),
            Err(Error::Degenerate { .. })
        ));
        assert!(two_mode_curvature(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn zero_coupling_has_flat_branches() {
        assert_eq!(two_mode_curvature(1.0, 2.0, 0.0).unwrap(), 0.0);
    }
}
