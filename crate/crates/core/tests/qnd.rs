use std::f64::consts::TAU;

use omx::cli::config_delta_omega0_hz;
use omx::fieldio::{MechanicalMode, Parity};
use omx::golden::shipped_config;
use omx::qnd::{drive_occupation, quantum_jump_snr, shot_noise_snr, QndInputs};
use proptest::prelude::*;

#[test]
fn delta_omega0_consistent_across_modules() {
    let cfg = shipped_config("p1").unwrap();
    let from_config = config_delta_omega0_hz(&cfg).unwrap();
    assert!((from_config / 16.0 - 1.0).abs() < 0.05, "{from_config}");
    let inputs = QndInputs::new(TAU * from_config, 1.0, 1.0, 0.0, 0.0).unwrap();
    assert!((quantum_jump_snr(&inputs) / (TAU * from_config).powi(2) - 1.0).abs() < 1e-15);
}

#[test]
fn quoted_p3_composition() {
    let cfg = shipped_config("p3").unwrap();
    let nd = drive_occupation(62e-12, &cfg.mechanical_mode().unwrap()).unwrap();
    assert!((nd / 7.8e6 - 1.0).abs() < 0.03);
    let dw = TAU * config_delta_omega0_hz(&cfg).unwrap();
    let inputs = QndInputs::new(dw, 1.0, dw * dw / 6.4e-8, 0.25, 7.8e6).unwrap();
    assert!((quantum_jump_snr(&inputs) / 6.4e-8 - 1.0).abs() < 1e-12);
    assert!((shot_noise_snr(&inputs) - 0.9984).abs() < 1e-12);
}

proptest! {
    #[test]
    fn shot_noise_is_the_exact_composition(
        dw in 1e-3..1e3f64, tau in 1e-6..1e3f64, s in 1e-6..1e6f64,
        nbar in 0.0..1e3f64, nd in 0.0..1e9f64,
    ) {
        let i = QndInputs::new(dw, tau, s, nbar, nd).unwrap();
        prop_assert_eq!(shot_noise_snr(&i), 8.0 * nd * nbar * quantum_jump_snr(&i));
        let doubled = QndInputs::new(2.0 * dw, tau, s, nbar, nd).unwrap();
        prop_assert!((quantum_jump_snr(&doubled) / quantum_jump_snr(&i) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn drive_occupation_quadratic_and_monotone(x in 1e-15..1e-9f64, f in 1e5..1e9f64, m in 1e-18..1e-12f64) {
        let mech = MechanicalMode::new("S", TAU * f, m, 1e3, Parity::EVEN).unwrap();
        let a = drive_occupation(x, &mech).unwrap();
        let b = drive_occupation(2.0 * x, &mech).unwrap();
        let c = drive_occupation(1.001 * x, &mech).unwrap();
        prop_assert!((b / a - 4.0).abs() < 1e-12);
        prop_assert!(c > a);
        prop_assert!((drive_occupation(2.0 * mech.x_zpf(), &mech).unwrap() - 1.0).abs() < 1e-12);
    }
}
