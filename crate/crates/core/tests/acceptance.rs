//! Acceptance criteria 1-11. Run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1`
//! to see one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use omx::golden::{self, CriterionOutcome};

fn check(id: u8, limit_s: f64) {
    let start = Instant::now();
    let o: CriterionOutcome = golden::criterion(id).expect("known criterion");
    report(&o, start.elapsed(), limit_s);
}

fn report(o: &CriterionOutcome, elapsed: Duration, limit_s: f64) {
    let secs = elapsed.as_secs_f64();
    let in_time = secs < limit_s;
    let verdict = if o.passed && in_time { "PASS" } else { "FAIL" };
    println!(
        "\n{verdict} criterion {:>2} {} [{:.3} s, limit {} s]: {}",
        o.id, o.name, secs, limit_s, o.detail
    );
    assert!(o.passed, "criterion {} failed: {}", o.id, o.detail);
    assert!(in_time, "criterion {} took {secs:.3} s (limit {limit_s} s)", o.id);
}

#[test]
fn criterion_01_quadratic_fit_recovery() {
    check(1, 1.0);
}

#[test]
fn criterion_02_delta_omega0_golden_value() {
    check(2, 1.0);
}

#[test]
fn criterion_03_drive_occupation_golden_value() {
    check(3, 1.0);
}

#[test]
fn criterion_04_shot_noise_snr_composition() {
    check(4, 1.0);
}

#[test]
fn criterion_05_spectral_sum_rule() {
    check(5, 5.0);
}

#[test]
fn criterion_06_classical_quantum_agreement() {
    check(6, 1.0);
}

#[test]
fn criterion_07_langevin_oracle_equivalence() {
    check(7, 120.0);
}

#[test]
fn criterion_08_perturbation_theory_oracle() {
    check(8, 1.0);
}

#[test]
fn criterion_09_selection_rule_zeros() {
    check(9, 1.0);
}

#[test]
fn criterion_10_detected_psd_structure() {
    check(10, 5.0);
}

#[test]
fn criterion_11_determinism() {
    let start = Instant::now();
    let run = golden::run_all();
    let elapsed = start.elapsed();
    let (o, _) = run.outcomes.last().expect("criterion 11 present");
    assert_eq!(o.id, 11);
    report(o, elapsed, 180.0);
}
