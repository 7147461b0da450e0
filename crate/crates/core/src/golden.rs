//! Golden-case runner: the acceptance criteria as executable checks on the
//! shipped device configs.
//!
//! The rendered report carries no timings, so repeated runs are
//! byte-identical.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::DeviceConfig;
use crate::coupling::{
    cross_coupling_rate, delta_omega0, fit_g2_from_sweep, g1_coefficient, g2_cross_term,
    g2_self_term, overlap_quadrature, two_mode_curvature,
};
use crate::fieldio::{MechanicalMode, Parity};
use crate::langevin::{periodogram_x2, simulate, SimulationConfig};
use crate::qnd::{drive_occupation, shot_noise_snr, QndInputs};
use crate::spectra::{
    detected_psd, linear_axis, noise_floor, sxx2_classical, sxx2_quantum, thermal_occupation,
    transduction, ThermalState,
};
use crate::synthetic::{MirroredPaddle, SyntheticMode};
use crate::units::{g2_from_hz_per_nm2, g2_to_hz_per_nm2, to_hz};
use crate::Result;

pub const P1_CONFIG: &str = include_str!("../configs/p1.toml");
pub const P2_CONFIG: &str = include_str!("../configs/p2.toml");
pub const P3_CONFIG: &str = include_str!("../configs/p3.toml");

pub fn shipped_config(name: &str) -> Result<DeviceConfig> {
    let text = match name {
        "p1" => P1_CONFIG,
        "p2" => P2_CONFIG,
        "p3" => P3_CONFIG,
        _ => {
            return Err(crate::Error::invalid("shipped config", format!("unknown name {name}")));
        }
    };
    DeviceConfig::parse(text, format!("configs/{name}.toml"), ".")
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriterionOutcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "[{}] criterion {:>2} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

fn outcome(id: u8, name: &'static str, result: Result<(bool, String)>) -> CriterionOutcome {
    let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

const TARGET_G2_HZ_PER_NM2: f64 = 400e6;

/// Quadratic-fit recovery on exact and noisy synthetic sweeps.
pub fn criterion_1() -> CriterionOutcome {
    outcome(1, "quadratic-fit recovery", (|| {
        let g2 = g2_from_hz_per_nm2(TARGET_G2_HZ_PER_NM2);
        let omega0 = TAU * 191e12;
        let exact: Vec<(f64, f64)> = (-2..=2)
            .map(|i| {
                let x = i as f64 * 1e-9;
                (x, omega0 + 0.5 * g2 * x * x)
            })
            .collect();
        let fit = fit_g2_from_sweep(&exact, 2.5e-9)?;
        let exact_err = rel(fit.g2, g2);

        let xs: Vec<f64> = (-8..=8).map(|i| i as f64 * 0.25e-9).collect();
        let mut worst: f64 = 0.0;
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let noisy: Vec<(f64, f64)> = xs
                .iter()
                .map(|&x| {
                    let shift = 0.5 * g2 * x * x * (1.0 + 0.05 * rng.random_range(-1.0..=1.0));
                    (x, omega0 + shift)
                })
                .collect();
            let f = fit_g2_from_sweep(&noisy, 2.5e-9)?;
            worst = worst.max(rel(f.g2, g2));
        }
        Ok((
            exact_err <= 1e-9 && worst <= 0.05,
            format!(
                "exact fit g2/2pi = {:.6e} Hz/nm^2 (rel err {:.2e}, tol 1e-9); worst noisy rel err over 100 seeds {:.4} (tol 0.05)",
                g2_to_hz_per_nm2(fit.g2),
                exact_err,
                worst
            ),
        ))
    })())
}

/// Two-phonon shift on the p1 config.
pub fn criterion_2() -> CriterionOutcome {
    outcome(2, "delta-omega0 golden value", (|| {
        let cfg = shipped_config("p1")?;
        let (_, g2) = cfg.coupling_values()?;
        let d = to_hz(delta_omega0(g2, &cfg.mechanical_mode()?));
        let err = rel(d, 16.0);
        Ok((err <= 0.05, format!("delta_omega0/2pi = {d:.4} Hz (rel dev from 16 Hz {err:.4}, tol 0.05)")))
    })())
}

/// Drive occupation for a 62 pm drive on the p3 config.
pub fn criterion_3() -> CriterionOutcome {
    outcome(3, "drive-occupation golden value", (|| {
        let cfg = shipped_config("p3")?;
        let nd = drive_occupation(62e-12, &cfg.mechanical_mode()?)?;
        let err = rel(nd, 7.8e6);
        Ok((err <= 0.03, format!("n_d = {nd:.5e} (rel dev from 7.8e6 {err:.4}, tol 0.03)")))
    })())
}

/// Shot-noise SNR composition with the quoted Σ⁽⁰⁾, n̄ and n_d.
pub fn criterion_4() -> CriterionOutcome {
    outcome(4, "shot-noise SNR composition", (|| {
        let cfg = shipped_config("p3")?;
        let (_, g2) = cfg.coupling_values()?;
        let dw = delta_omega0(g2, &cfg.mechanical_mode()?);
        let tau = 1.0;
        let s_omega = tau * dw * dw / 6.4e-8;
        let inputs = QndInputs::new(dw, tau, s_omega, 0.25, 7.8e6)?;
        let s = shot_noise_snr(&inputs);
        Ok(((0.99..=1.01).contains(&s), format!("S = {s:.6} (range [0.99, 1.01])")))
    })())
}

fn fig_s1_mechanics() -> Result<MechanicalMode> {
    MechanicalMode::new("S", TAU * 5.5e6, 450e-18, 1e3, Parity::new(-1, 1, 1)?)
}

/// Axis used for the sum rule: uniform step `Γ/10` over
/// `±(2ω_m + 1000Γ)`.
pub fn sum_rule_axis(mech: &MechanicalMode) -> Result<Vec<f64>> {
    let g = mech.gamma();
    let half = 2.0 * mech.omega_m + 1000.0 * g;
    let n = (2.0 * half / (0.1 * g)).round() as usize + 1;
    linear_axis(-half, half, n)
}

/// Spectral sum rule `∫S dω/2π = 3(2n̄+1)² x_zpf⁴`.
pub fn criterion_5() -> CriterionOutcome {
    outcome(5, "spectral sum rule", (|| {
        let mech = fig_s1_mechanics()?;
        let axis = sum_rule_axis(&mech)?;
        let x4 = mech.x_zpf().powi(4);
        let mut worst: f64 = 0.0;
        for nbar in [0.0, 1.0, 1e3, 1e6] {
            let state = ThermalState::from_occupation(&mech, nbar)?;
            let area = sxx2_quantum(&mech, &state, &axis)?.integrate();
            let expected = 3.0 * (2.0 * nbar + 1.0).powi(2) * x4;
            worst = worst.max(rel(area, expected));
        }
        Ok((
            worst <= 0.02,
            format!("worst rel dev over nbar in {{0, 1, 1e3, 1e6}} = {worst:.5} (tol 0.02, {} points)", axis.len()),
        ))
    })())
}

/// Classical and quantum `S_x²` near `2ω_m` at 300 K.
pub fn criterion_6() -> CriterionOutcome {
    outcome(6, "classical/quantum agreement", (|| {
        let mech = fig_s1_mechanics()?;
        let wm2 = 2.0 * mech.omega_m;
        let axis = linear_axis(0.9 * wm2, 1.1 * wm2, 2001)?;
        let quantum = sxx2_quantum(&mech, &thermal_occupation(&mech, 300.0)?, &axis)?;
        let classical = sxx2_classical(&mech, 300.0, &axis)?;
        let mut worst: f64 = 0.0;
        for (c, q) in classical.values.iter().zip(&quantum.values) {
            worst = worst.max(rel(*c, *q));
        }
        let at_peak = classical.value_at(wm2).zip(quantum.value_at(wm2)).map(|(c, q)| c / q);
        Ok((
            worst <= 0.05,
            format!(
                "worst pointwise rel dev over [0.9, 1.1]*2wm = {worst:.4} (tol 0.05); classical/quantum at 2wm = {:.4}",
                at_peak.unwrap_or(f64::NAN)
            ),
        ))
    })())
}

/// Parameters of the Langevin oracle run.
pub fn langevin_config(seed: u64) -> Result<SimulationConfig> {
    let mech = fig_s1_mechanics()?;
    let dt = 0.25 / mech.omega_m;
    let n_segments = 64;
    Ok(SimulationConfig {
        mech,
        temperature: 300.0,
        dt,
        n_steps: n_segments * (1 << 20),
        n_segments,
        seed,
        initial: None,
    })
}

/// Band means of the simulated periodogram and of the classical and
/// quantum analytic spectra over `|ω − 2ω_m| <= Γ`.
pub fn langevin_band_means(config: &SimulationConfig) -> Result<(f64, f64, f64)> {
    let mech = &config.mech;
    let traj = simulate(config)?;
    let psd = periodogram_x2(&traj, config.n_segments)?;
    let (wm2, g) = (2.0 * mech.omega_m, mech.gamma());
    let band: Vec<(f64, f64)> = psd
        .omega_axis
        .iter()
        .zip(&psd.values)
        .filter(|(w, _)| (**w - wm2).abs() <= g)
        .map(|(w, s)| (*w, *s))
        .collect();
    let omegas: Vec<f64> = band.iter().map(|(w, _)| *w).collect();
    let n = band.len() as f64;
    let sim = band.iter().map(|(_, s)| s).sum::<f64>() / n;
    let classical = sxx2_classical(mech, config.temperature, &omegas)?.values.iter().sum::<f64>() / n;
    let state = thermal_occupation(mech, config.temperature)?;
    let quantum = sxx2_quantum(mech, &state, &omegas)?.values.iter().sum::<f64>() / n;
    Ok((sim, classical, quantum))
}

/// Langevin periodogram of `x²` against the classical thermal-kick form.
pub fn criterion_7() -> CriterionOutcome {
    outcome(7, "Langevin oracle equivalence", (|| {
        let config = langevin_config(crate::cli::DEFAULT_SEED)?;
        let (sim, classical, quantum) = langevin_band_means(&config)?;
        let err = rel(sim, classical);
        Ok((
            err <= 0.10,
            format!(
                "band mean sim/classical = {:.4} (tol 0.10 rel); sim/quantum = {:.4}; {} segments",
                sim / classical,
                sim / quantum,
                config.n_segments
            ),
        ))
    })())
}

/// Partner frequency ratios for the perturbation-oracle grid.
pub const ORACLE_RATIOS: [f64; 10] = [0.80, 0.90, 0.95, 0.99, 0.999, 1.001, 1.01, 1.05, 1.10, 1.25];

/// Cross term against the curvature of the exact two-level problem.
pub fn criterion_8() -> CriterionOutcome {
    outcome(8, "perturbation-theory oracle", (|| {
        let paddle = MirroredPaddle::default();
        let contrast = paddle.contrast();
        let mech = paddle.sliding_mode("S", TAU * 5.5e6, 450e-18, 1e3)?;
        let w = TAU * 191e12;
        let k = std::f64::consts::PI / paddle.half_length;
        let target = paddle.optical_mode(&SyntheticMode::new("M1", w, 1, 0.5 * k), "S")?;
        let mut worst: f64 = 0.0;
        for (i, r) in ORACLE_RATIOS.iter().enumerate() {
            let mut spec = SyntheticMode::new(&format!("P{i}"), r * w, -1, (0.7 + 0.1 * i as f64) * k);
            spec.e_amplitude = 0.5 + 0.15 * i as f64;
            let partner = paddle.optical_mode(&spec, "S")?;
            let analytic = g2_cross_term(&partner, &target, &mech, &contrast)?;
            let c = cross_coupling_rate(&partner, &target, &mech, &contrast)?;
            let exact = two_mode_curvature(target.omega, partner.omega, c)?;
            worst = worst.max(rel(analytic, exact));
        }
        Ok((worst <= 1e-6, format!("worst rel dev over 10-point grid = {worst:.3e} (tol 1e-6)")))
    })())
}

/// Mirror cancellation of `g1` and the self term for even and odd modes.
pub fn criterion_9() -> CriterionOutcome {
    outcome(9, "selection-rule zeros", (|| {
        let paddle = MirroredPaddle::default();
        let contrast = paddle.contrast();
        let mech = paddle.sliding_mode("S", TAU * 5.5e6, 450e-18, 1e3)?;
        let k = std::f64::consts::PI / paddle.half_length;
        let even = paddle.optical_mode(&SyntheticMode::new("M1", TAU * 191e12, 1, 0.5 * k), "S")?;
        let odd = paddle.optical_mode(&SyntheticMode::new("M2", TAU * 193e12, -1, 0.8 * k), "S")?;
        let mut worst: f64 = 0.0;
        for m in [&even, &odd] {
            let bm = m.boundary_for("S")?;
            let q = overlap_quadrature(bm, bm, &contrast)?;
            worst = worst.max(q.value.abs() / q.abs_sum);
            // g1 and the self term inherit the cancellation of the quadrature.
            let g1 = g1_coefficient(m, &mech, &contrast)?;
            let gs = g2_self_term(m, &mech, &contrast)?;
            let scale_g1 = 0.5 * m.omega * q.abs_sum / crate::fieldio::mode_norm(m)?;
            worst = worst.max(g1.abs() / scale_g1).max(gs.abs() / (scale_g1 * scale_g1 / (0.5 * m.omega)));
        }
        let cross = overlap_quadrature(even.boundary_for("S")?, odd.boundary_for("S")?, &contrast)?;
        let cross_ratio = cross.value.abs() / cross.abs_sum;
        Ok((
            worst <= 1e-12 && cross_ratio > 1e-3,
            format!("worst |self| / summand scale = {worst:.2e} (tol 1e-12); allowed cross overlap ratio {cross_ratio:.3}"),
        ))
    })())
}

/// Structural checks of the detected PSD for one shipped config.
fn fig3a_check(name: &str) -> Result<(bool, String)> {
    let cfg = shipped_config(name)?;
    let mech = cfg.mechanical_mode()?;
    let cavity = cfg.cavity()?;
    let env = cfg.environment()?;
    let (g1, g2) = cfg.coupling_values()?;
    let wm = mech.omega_m;
    // Step Γ/2 with 2ω_m on a grid point.
    let n = 12_001;
    let axis = linear_axis(0.0, 6.0 * wm, n)?;
    let state = thermal_occupation(&mech, env.temperature_k)?;
    let coeffs = transduction(g1, g2, &cavity, 0.5 * cavity.kappa);
    let sp = detected_psd(env.power_w, &coeffs, &sxx2_quantum(&mech, &state, &axis)?)?;
    let step = axis[1] - axis[0];
    let argmax = |lo: f64, hi: f64| {
        (0..n)
            .filter(|&i| axis[i] >= lo && axis[i] <= hi)
            .max_by(|&a, &b| sp.values[a].total_cmp(&sp.values[b]))
            .expect("nonempty window")
    };
    let i2 = argmax(1.5 * wm, 2.5 * wm);
    let i0 = argmax(0.0, wm);
    let peak_at_2wm = (axis[i2] - 2.0 * wm).abs() <= 0.5 * step;
    let peak_at_dc = i0 == 0;
    let floor = noise_floor(env.nep_w_per_rthz)?;
    let above = sp.values[i2] > floor;
    Ok((
        peak_at_2wm && peak_at_dc && above,
        format!(
            "{name}: peak at {:.6} wm, DC peak {}, S_P(2wm) = {:.3e} W^2/Hz vs floor {:.3e}",
            axis[i2] / wm,
            if peak_at_dc { "at 0" } else { "missing" },
            sp.values[i2],
            floor
        ),
    ))
}

/// Fig. 3a structure on the p1 and p2 configs.
pub fn criterion_10() -> CriterionOutcome {
    outcome(10, "detected PSD structure", (|| {
        let (a, da) = fig3a_check("p1")?;
        let (b, db) = fig3a_check("p2")?;
        Ok((a && b, format!("{da}; {db}")))
    })())
}

pub fn criterion(id: u8) -> Option<CriterionOutcome> {
    Some(match id {
        1 => criterion_1(),
        2 => criterion_2(),
        3 => criterion_3(),
        4 => criterion_4(),
        5 => criterion_5(),
        6 => criterion_6(),
        7 => criterion_7(),
        8 => criterion_8(),
        9 => criterion_9(),
        10 => criterion_10(),
        _ => return None,
    })
}

#[derive(Debug, Clone)]
pub struct GoldenRun {
    pub outcomes: Vec<(CriterionOutcome, Duration)>,
}

impl GoldenRun {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|(o, _)| o.passed)
    }

    /// Deterministic report, one line per criterion.
    pub fn render(&self) -> String {
        render(self.outcomes.iter().map(|(o, _)| o))
    }
}

fn render<'a>(outcomes: impl Iterator<Item = &'a CriterionOutcome>) -> String {
    let mut s = String::new();
    for o in outcomes {
        writeln!(s, "{}", o.line()).unwrap();
    }
    s
}

fn timed(id: u8) -> (CriterionOutcome, Duration) {
    let start = Instant::now();
    let o = criterion(id).expect("known criterion");
    (o, start.elapsed())
}

/// Re-runs criteria 1-10 and compares the rendered report with `first`.
pub fn criterion_11(first: &str) -> CriterionOutcome {
    let second: Vec<CriterionOutcome> = (1..=10).map(|id| criterion(id).expect("known")).collect();
    let again = render(second.iter());
    let same = again == first;
    CriterionOutcome {
        id: 11,
        name: "determinism",
        passed: same,
        detail: if same {
            format!("repeated run byte-identical ({} bytes)", first.len())
        } else {
            "repeated run differs".to_string()
        },
    }
}

/// Runs criteria 1-11.
pub fn run_all() -> GoldenRun {
    let mut outcomes: Vec<_> = (1..=10).map(timed).collect();
    let first = render(outcomes.iter().map(|(o, _)| o));
    let start = Instant::now();
    let o = criterion_11(&first);
    outcomes.push((o, start.elapsed()));
    GoldenRun { outcomes }
}
