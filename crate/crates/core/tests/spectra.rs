use std::f64::consts::{PI, TAU};

use omx::fieldio::{MechanicalMode, Parity};
use omx::golden::shipped_config;
use omx::spectra::{
    detected_psd, linear_axis, noise_floor, sxx2_classical, sxx2_quantum, sxx2_quantum_at,
    thermal_occupation, transduction, transmission, transmission_derivatives, CavityTransmission,
    Sidedness, ThermalState,
};
use proptest::prelude::*;

fn fig_s1() -> MechanicalMode {
    MechanicalMode::new("S", TAU * 5.5e6, 450e-18, 1e3, Parity::EVEN).unwrap()
}

/// Integral over `±20Γ` windows around each line, divided by the fraction
/// of a Lorentzian's area inside such a window, `(2/π) atan 20`.
fn windowed_area(mech: &MechanicalMode, state: &ThermalState) -> f64 {
    let g = mech.gamma();
    let wm2 = 2.0 * mech.omega_m;
    let mut total = 0.0;
    for centre in [-wm2, 0.0, wm2] {
        let axis = linear_axis(centre - 20.0 * g, centre + 20.0 * g, 8001).unwrap();
        total += sxx2_quantum(mech, state, &axis).unwrap().integrate();
    }
    total / (2.0 / PI * 20f64.atan())
}

#[test]
fn sum_rule_in_line_windows() {
    let mech = fig_s1();
    let x4 = mech.x_zpf().powi(4);
    for nbar in [0.0, 1.0, 1e3, 1e6] {
        let state = ThermalState::from_occupation(&mech, nbar).unwrap();
        let area = windowed_area(&mech, &state);
        let expected = 3.0 * (2.0 * nbar + 1.0).powi(2) * x4;
        assert!((area / expected - 1.0).abs() < 0.02, "nbar {nbar}: {area} vs {expected}");
    }
}

#[test]
fn sum_rule_on_wide_axis_to_1e_3() {
    let mech = fig_s1();
    let axis = omx::golden::sum_rule_axis(&mech).unwrap();
    for nbar in [0.0, 3.0, 1e5] {
        let state = ThermalState::from_occupation(&mech, nbar).unwrap();
        let area = sxx2_quantum(&mech, &state, &axis).unwrap().integrate();
        let expected = 3.0 * (2.0 * nbar + 1.0).powi(2) * mech.x_zpf().powi(4);
        assert!((area / expected - 1.0).abs() < 1e-3, "nbar {nbar}");
    }
}

#[test]
fn occupation_golden_values() {
    let n = thermal_occupation(&fig_s1(), 300.0).unwrap().nbar;
    assert!((n / 1.137e6 - 1.0).abs() < 1e-3, "{n}");
    let cryo = MechanicalMode::new("S", TAU * 217e6, 314e-18, 1e5, Parity::EVEN).unwrap();
    let n = thermal_occupation(&cryo, 0.010).unwrap().nbar;
    assert!((n - 0.53).abs() < 0.02, "{n}");
}

/// Classical and quantum forms near `2ω_m` in the high-occupation limit.
#[test]
fn classical_matches_quantum_at_high_occupation() {
    let mech = fig_s1();
    let wm = mech.omega_m;
    let axis = linear_axis(1.9 * wm, 2.1 * wm, 801).unwrap();
    for (nbar, tol) in [(1e4, 0.05), (1e6, 0.005)] {
        let state = ThermalState::from_occupation(&mech, nbar).unwrap();
        let q = sxx2_quantum(&mech, &state, &axis).unwrap();
        let c = sxx2_classical(&mech, state.temperature, &axis).unwrap();
        let worst = q
            .values
            .iter()
            .zip(&c.values)
            .map(|(q, c)| (c / q - 1.0).abs())
            .fold(0.0, f64::max);
        assert!(worst <= tol, "nbar {nbar}: worst classical/quantum deviation {worst:.4} > {tol}");
    }
}

#[test]
fn classical_to_quantum_ratio_at_twice_wm() {
    let mech = fig_s1();
    for nbar in [1e4, 1e6] {
        let state = ThermalState::from_occupation(&mech, nbar).unwrap();
        let w = [2.0 * mech.omega_m];
        let q = sxx2_quantum(&mech, &state, &w).unwrap().values[0];
        let c = sxx2_classical(&mech, state.temperature, &w).unwrap().values[0];
        assert!((c / q - 1.5).abs() < 2.0 / nbar + 1e-5, "nbar {nbar}: {}", c / q);
    }
}

#[test]
fn one_sided_doubles_positive_frequencies() {
    let mech = fig_s1();
    let state = thermal_occupation(&mech, 300.0).unwrap();
    let axis = linear_axis(-3.0 * mech.omega_m, 3.0 * mech.omega_m, 601).unwrap();
    let two = sxx2_quantum(&mech, &state, &axis).unwrap();
    let one = two.to_one_sided();
    assert_eq!(one.sidedness, Sidedness::OneSided);
    assert_eq!(one.omega_axis[0], 0.0);
    assert_eq!(one.values[0], two.values[300]);
    for (i, v) in one.values.iter().enumerate().skip(1) {
        assert_eq!(*v, 2.0 * two.values[300 + i]);
    }
}

fn fig3a_psd(name: &str) -> (f64, f64, f64) {
    let cfg = shipped_config(name).unwrap();
    let mech = cfg.mechanical_mode().unwrap();
    let cav = cfg.cavity().unwrap();
    let env = cfg.environment().unwrap();
    let (g1, g2) = cfg.coupling_values().unwrap();
    let state = thermal_occupation(&mech, env.temperature_k).unwrap();
    let axis = [0.0, 2.0 * mech.omega_m];
    let c = transduction(g1, g2, &cav, 0.5 * cav.kappa);
    let sp = detected_psd(env.power_w, &c, &sxx2_quantum(&mech, &state, &axis).unwrap()).unwrap();
    (sp.values[0], sp.values[1], noise_floor(env.nep_w_per_rthz).unwrap())
}

#[test]
fn detected_peaks_clear_the_detector_floor() {
    for name in ["p1", "p2"] {
        let (dc, peak, floor) = fig3a_psd(name);
        assert!(peak > floor, "{name}: {peak:e} <= {floor:e}");
        assert!(dc > peak, "{name}: DC line carries the larger weight");
    }
    assert!((noise_floor(2.5e-12).unwrap() / 6.25e-24 - 1.0).abs() < 1e-15);
}

#[test]
fn transmission_examples() {
    let cav = CavityTransmission::new(TAU * 191e12, 1.4e4, 0.90).unwrap();
    let k = cav.kappa;
    assert!((k / 8.57e10 - 1.0).abs() < 1e-3);
    assert!((transmission(&cav, 0.0) - 0.90).abs() < 1e-15);
    assert!((transmission(&cav, 0.5 * k) - 0.95).abs() < 1e-15);
    assert!((transmission(&cav, 1e6 * k) - 1.0).abs() < 1e-12);
    let (s, c) = transmission_derivatives(&cav, 0.0);
    assert_eq!(s, 0.0);
    assert!((c / (8.0 * 0.1 / (k * k)) - 1.0).abs() < 1e-12);
    let (s, c) = transmission_derivatives(&cav, 0.5 * k);
    assert!((s / (0.1 / k) - 1.0).abs() < 1e-12);
    assert!((c / (-2.0 * 0.1 / (k * k)) - 1.0).abs() < 1e-12);
    let (_, c) = transmission_derivatives(&cav, k / (2.0 * 3f64.sqrt()));
    assert!(c.abs() < 1e-12 * 0.8 / (k * k));
}

proptest! {
    #[test]
    fn detailed_balance(nbar in 1e-3..1e7f64, q in 10.0..1e6f64) {
        let mech = MechanicalMode::new("S", TAU * 5.5e6, 450e-18, q, Parity::EVEN).unwrap();
        let s = ThermalState::from_occupation(&mech, nbar).unwrap();
        let g = mech.gamma();
        let wm2 = 2.0 * mech.omega_m;
        // Remove the other lines' tails before comparing the peak weights.
        let line = |w: f64, n: f64| sxx2_quantum_at(&mech, &s, w) - n;
        let tails_plus = sxx2_quantum_at(&mech, &ThermalState { nbar, temperature: 0.0 }, wm2)
            - 2.0 * mech.x_zpf().powi(4) * 2.0 * (nbar + 1.0).powi(2) / g;
        let tails_minus = sxx2_quantum_at(&mech, &ThermalState { nbar, temperature: 0.0 }, -wm2)
            - 2.0 * mech.x_zpf().powi(4) * 2.0 * nbar * nbar / g;
        let ratio = line(wm2, tails_plus) / line(-wm2, tails_minus);
        let expected = ((nbar + 1.0) / nbar).powi(2);
        prop_assert!((ratio / expected - 1.0).abs() < 1e-9, "{} vs {}", ratio, expected);
    }

    #[test]
    fn spectra_nonnegative(
        nbar in 0.0..1e7f64,
        t in 1e-3..1e3f64,
        q in 1.0..1e6f64,
        w in -1e9..1e9f64,
    ) {
        let mech = MechanicalMode::new("S", TAU * 5.5e6, 450e-18, q, Parity::EVEN).unwrap();
        let s = ThermalState::from_occupation(&mech, nbar).unwrap();
        prop_assert!(sxx2_quantum_at(&mech, &s, w) >= 0.0);
        prop_assert!(sxx2_classical(&mech, t, &[w]).unwrap().values[0] >= 0.0);
    }

    #[test]
    fn derivative_consistency(u in -5.0..5.0f64, q_o in 1e3..1e7f64, t_o in 0.0..0.99f64) {
        let cav = CavityTransmission::new(TAU * 191e12, q_o, t_o).unwrap();
        let k = cav.kappa;
        let d = 0.5 * u * k;
        let h = 1e-5 * k;
        let (s, c) = transmission_derivatives(&cav, d);
        let depth = 1.0 - t_o;
        let slope_scale = depth / k;
        let curv_scale = depth / (k * k);
        let fd_slope = (transmission(&cav, d + h) - transmission(&cav, d - h)) / (2.0 * h);
        prop_assert!((fd_slope - s).abs() <= 1e-8 * slope_scale);
        let fd_curv_of_slope =
            (transmission_derivatives(&cav, d + h).0 - transmission_derivatives(&cav, d - h).0) / (2.0 * h);
        prop_assert!((fd_curv_of_slope - c).abs() <= 1e-8 * curv_scale);
        let fd_curv = (transmission(&cav, d + h) - 2.0 * transmission(&cav, d) + transmission(&cav, d - h)) / (h * h);
        // Round-off of the second difference is about 4ε·T/h² with T <= 1.
        prop_assert!((fd_curv - c).abs() <= 1e-4 / (k * k));
    }
}
