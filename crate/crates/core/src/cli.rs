//! Pipelines behind the `omx` subcommands.
//!
//! Each pipeline returns its CSV text; the binary only parses arguments,
//! writes files and maps errors to exit codes. Argument structs derive
//! [`clap::Args`] so the binary and library share one definition.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;

use crate::config::DeviceConfig;
use crate::coupling::{delta_omega0, g2_total};
use crate::fieldio::{MechanicalMode, Parity};
use crate::langevin::{periodogram_x2, simulate, SimulationConfig, Trajectory};
use crate::output::{fmt_num, CsvTable};
use crate::qnd::{drive_occupation, quantum_jump_snr, shot_noise_snr, QndInputs};
use crate::spectra::{
    default_axis, detected_psd, detuning_sweep, linear_axis, noise_floor, sxx2_quantum,
    thermal_occupation, transduction, CavityTransmission,
};
use crate::units::{from_hz, g1_to_hz_per_nm, g2_to_hz_per_nm2, to_hz};
use crate::{Error, Result};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Detuning {
    /// `Δ = κ/2`
    HalfKappa,
    /// `Δ = κ/(2√3)`, where `d²T/dΔ² = 0`.
    MaxSlope,
    /// Explicit detuning [rad/s].
    Value(f64),
}

impl Detuning {
    pub fn resolve(&self, cavity: &CavityTransmission) -> f64 {
        match *self {
            Detuning::HalfKappa => 0.5 * cavity.kappa,
            Detuning::MaxSlope => cavity.max_slope_detuning(),
            Detuning::Value(d) => d,
        }
    }
}

impl FromStr for Detuning {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "half-kappa" => Ok(Detuning::HalfKappa),
            "max-slope" => Ok(Detuning::MaxSlope),
            _ => s
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .map(Detuning::Value)
                .ok_or_else(|| format!("expected half-kappa, max-slope or a number in rad/s, got {s:?}")),
        }
    }
}

/// `min:max:n` frequency or detuning axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl AxisSpec {
    pub fn values(&self) -> Result<Vec<f64>> {
        linear_axis(self.min, self.max, self.n)
    }
}

impl FromStr for AxisSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || format!("expected min:max:n, got {s:?}");
        if parts.len() != 3 {
            return Err(bad());
        }
        let min = parts[0].parse::<f64>().map_err(|_| bad())?;
        let max = parts[1].parse::<f64>().map_err(|_| bad())?;
        let n = parts[2].parse::<usize>().map_err(|_| bad())?;
        if !(min < max) || n < 2 {
            return Err(format!("axis {s:?} needs min < max and n >= 2"));
        }
        Ok(AxisSpec { min, max, n })
    }
}

#[derive(Debug, Clone, Args)]
pub struct CouplingArgs {
    /// Device config with a [fields] section.
    pub config: PathBuf,
}

/// Coupling coefficients from field files: one row per cross-term pair,
/// then the self term and summary rows.
pub fn coupling_csv(cfg: &DeviceConfig) -> Result<String> {
    let mech = cfg.mechanical_mode()?;
    let contrast = cfg.contrast()?;
    let (modes, target) = cfg.load_modes()?;
    let r = g2_total(&modes, &modes[target], &mech, &contrast)?;
    let mut t = CsvTable::new(["pair_label", "g2_contribution_hz_per_nm2"]);
    for (label, g) in &r.g2_contributions {
        t.push_labeled(label, &[g2_to_hz_per_nm2(*g)]);
    }
    t.push_labeled("g2_self_hz_per_nm2", &[g2_to_hz_per_nm2(r.g2_self)]);
    t.push_labeled("g1_hz_per_nm", &[g1_to_hz_per_nm(r.g1)]);
    t.push_labeled("g2_total_hz_per_nm2", &[g2_to_hz_per_nm2(r.g2_total)]);
    t.push_labeled("delta_omega0_hz", &[to_hz(r.delta_omega0)]);
    Ok(t.render())
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    pub config: PathBuf,
    /// Bath temperature [K]; overrides the config.
    #[arg(long)]
    pub temp_k: Option<f64>,
    /// Input optical power [W]; overrides the config.
    #[arg(long)]
    pub power_w: Option<f64>,
    /// Laser detuning: half-kappa, max-slope or a value in rad/s.
    #[arg(long, default_value = "half-kappa", allow_hyphen_values = true)]
    pub detuning: Detuning,
    /// Detector NEP [W/√Hz]; overrides the config.
    #[arg(long)]
    pub nep_w_per_rthz: Option<f64>,
    /// Frequency axis min:max:n [rad/s]; default is [0, 6ω_m] with 2048 points.
    #[arg(long, allow_hyphen_values = true)]
    pub axis: Option<AxisSpec>,
    /// Fold to positive frequencies, doubling ω > 0.
    #[arg(long)]
    pub one_sided: bool,
}

impl SpectrumArgs {
    pub fn new(config: impl Into<PathBuf>) -> Self {
        Self {
            config: config.into(),
            temp_k: None,
            power_w: None,
            detuning: Detuning::HalfKappa,
            nep_w_per_rthz: None,
            axis: None,
            one_sided: false,
        }
    }
}

struct Scenario {
    mech: MechanicalMode,
    cavity: CavityTransmission,
    g1: f64,
    g2: f64,
    temperature: f64,
    power: f64,
    nep: f64,
}

fn scenario(
    cfg: &DeviceConfig,
    temp_k: Option<f64>,
    power_w: Option<f64>,
    nep: Option<f64>,
) -> Result<Scenario> {
    let env = cfg.environment()?;
    let (g1, g2) = cfg.coupling_values()?;
    Ok(Scenario {
        mech: cfg.mechanical_mode()?,
        cavity: cfg.cavity()?,
        g1,
        g2,
        temperature: temp_k.unwrap_or(env.temperature_k),
        power: power_w.unwrap_or(env.power_w),
        nep: nep.unwrap_or(env.nep_w_per_rthz),
    })
}

/// Thermal `S_x²` and detected `S_P` over a frequency axis, with the flat
/// detector floor. The floor is a per-point constant and is not folded.
pub fn spectrum_csv(cfg: &DeviceConfig, args: &SpectrumArgs) -> Result<String> {
    let s = scenario(cfg, args.temp_k, args.power_w, args.nep_w_per_rthz)?;
    s.cavity.check_sideband_unresolved(s.mech.omega_m);
    let axis = match &args.axis {
        Some(a) => a.values()?,
        None => default_axis(s.mech.omega_m),
    };
    let state = thermal_occupation(&s.mech, s.temperature)?;
    let sxx2 = sxx2_quantum(&s.mech, &state, &axis)?;
    let coeffs = transduction(s.g1, s.g2, &s.cavity, args.detuning.resolve(&s.cavity));
    let mut sp = detected_psd(s.power, &coeffs, &sxx2)?;
    let mut sx = sxx2;
    if args.one_sided {
        sx = sx.to_one_sided();
        sp = sp.to_one_sided();
    }
    let floor = noise_floor(s.nep)?;
    let mut t = CsvTable::new([
        "omega_rad_s",
        "s_x2_m4_per_hz",
        "s_p_w2_per_hz",
        "noise_floor_w2_per_hz",
    ]);
    for ((w, x), p) in sx.omega_axis.iter().zip(&sx.values).zip(&sp.values) {
        t.push_numbers(&[*w, *x, *p, floor]);
    }
    Ok(t.render())
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    pub config: PathBuf,
    #[arg(long)]
    pub temp_k: Option<f64>,
    #[arg(long)]
    pub power_w: Option<f64>,
    /// Detuning axis min:max:n [rad/s]; default is [−2κ, 2κ] with 401 points.
    #[arg(long, allow_hyphen_values = true)]
    pub deltas: Option<AxisSpec>,
    /// Overrides g⁽¹⁾/2π [Hz/nm].
    #[arg(long)]
    pub g1_hz_per_nm: Option<f64>,
    /// Overrides g⁽²⁾/2π [Hz/nm²].
    #[arg(long)]
    pub g2_hz_per_nm2: Option<f64>,
}

impl SweepArgs {
    pub fn new(config: impl Into<PathBuf>) -> Self {
        Self {
            config: config.into(),
            temp_k: None,
            power_w: None,
            deltas: None,
            g1_hz_per_nm: None,
            g2_hz_per_nm2: None,
        }
    }
}

/// Detected PSD at `2ω_m` versus laser detuning.
pub fn sweep_csv(cfg: &DeviceConfig, args: &SweepArgs) -> Result<String> {
    let mut s = scenario(cfg, args.temp_k, args.power_w, None)?;
    if let Some(g1) = args.g1_hz_per_nm {
        s.g1 = crate::units::g1_from_hz_per_nm(g1);
    }
    if let Some(g2) = args.g2_hz_per_nm2 {
        s.g2 = crate::units::g2_from_hz_per_nm2(g2);
    }
    let deltas = match &args.deltas {
        Some(a) => a.values()?,
        None => linear_axis(-2.0 * s.cavity.kappa, 2.0 * s.cavity.kappa, 401)?,
    };
    let state = thermal_occupation(&s.mech, s.temperature)?;
    let rows = detuning_sweep(s.g1, s.g2, &s.cavity, &s.mech, &state, s.power, &deltas)?;
    let mut t = CsvTable::new(["delta_rad_s", "s_p_at_2wm"]);
    for (d, p) in rows {
        t.push_numbers(&[d, p]);
    }
    Ok(t.render())
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    /// Mechanical frequency [Hz].
    #[arg(long)]
    pub fm_hz: f64,
    /// Effective mass [kg].
    #[arg(long)]
    pub mass_kg: f64,
    #[arg(long)]
    pub qm: f64,
    #[arg(long)]
    pub temp_k: f64,
    /// Time step [s]; default 0.25/ω_m.
    #[arg(long)]
    pub dt_s: Option<f64>,
    /// Total number of samples.
    #[arg(long, default_value_t = 1 << 20)]
    pub steps: usize,
    #[arg(long, default_value_t = 64)]
    pub segments: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Also write the trajectory to this CSV.
    #[arg(long)]
    pub dump_traj: Option<PathBuf>,
}

impl SimulateArgs {
    pub fn config(&self) -> Result<SimulationConfig> {
        let omega_m = from_hz(self.fm_hz);
        let mech = MechanicalMode::new("S", omega_m, self.mass_kg, self.qm, Parity::EVEN)?;
        Ok(SimulationConfig {
            mech,
            temperature: self.temp_k,
            dt: self.dt_s.unwrap_or(0.25 / omega_m),
            n_steps: self.steps,
            n_segments: self.segments,
            seed: self.seed,
            initial: None,
        })
    }
}

pub fn trajectory_csv(traj: &Trajectory) -> String {
    let mut t = CsvTable::new(["t_s", "x_m", "v_m_per_s"]);
    for (i, x) in traj.positions.iter().enumerate() {
        let v = traj.velocities.get(i).copied().unwrap_or(f64::NAN);
        t.push_numbers(&[i as f64 * traj.dt, *x, v]);
    }
    t.render()
}

/// Runs the Langevin integrator; returns the periodogram CSV and the
/// trajectory CSV when requested.
pub fn simulate_csv(args: &SimulateArgs) -> Result<(String, Option<String>)> {
    let config = args.config()?;
    let traj = simulate(&config)?;
    let psd = periodogram_x2(&traj, config.n_segments)?;
    let mut t = CsvTable::new(["omega_rad_s", "s_x2_est"]);
    for (w, s) in psd.omega_axis.iter().zip(&psd.values) {
        t.push_numbers(&[*w, *s]);
    }
    let dump = args.dump_traj.as_ref().map(|_| trajectory_csv(&traj));
    Ok((t.render(), dump))
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("drive").required(true).args(["drive_pm", "nd"])))]
pub struct QndArgs {
    /// Two-phonon frequency shift Δω₀/2π [Hz].
    #[arg(long)]
    pub delta_omega0_hz: f64,
    /// Thermal decoherence lifetime [s].
    #[arg(long)]
    pub tau_s: f64,
    /// Readout frequency-noise PSD [rad²/s].
    #[arg(long)]
    pub s_omega: f64,
    /// Bath occupation during the measurement.
    #[arg(long)]
    pub nbar: f64,
    /// Drive amplitude [pm]; needs --fm-hz and --mass-kg.
    #[arg(long, requires_all = ["fm_hz", "mass_kg"])]
    pub drive_pm: Option<f64>,
    /// Drive occupation in phonons.
    #[arg(long)]
    pub nd: Option<f64>,
    #[arg(long)]
    pub fm_hz: Option<f64>,
    #[arg(long)]
    pub mass_kg: Option<f64>,
}

/// Labeled text report and `quantity,value` CSV.
pub fn qnd_report(args: &QndArgs) -> Result<(String, String)> {
    let n_drive = match (args.nd, args.drive_pm) {
        (Some(n), _) => n,
        (None, Some(pm)) => {
            let (f, m) = args
                .fm_hz
                .zip(args.mass_kg)
                .ok_or_else(|| Error::invalid("qnd", "--drive-pm needs --fm-hz and --mass-kg"))?;
            let mech = MechanicalMode::new("S", from_hz(f), m, 1.0, Parity::EVEN)?;
            drive_occupation(pm * 1e-12, &mech)?
        }
        (None, None) => return Err(Error::invalid("qnd", "one of --drive-pm or --nd is required")),
    };
    let inputs = QndInputs::new(from_hz(args.delta_omega0_hz), args.tau_s, args.s_omega, args.nbar, n_drive)?;
    let sigma0 = quantum_jump_snr(&inputs);
    let snr = shot_noise_snr(&inputs);
    let mut report = String::new();
    writeln!(report, "quantum-jump SNR Sigma0 = {}", fmt_num(sigma0)).unwrap();
    writeln!(report, "drive occupation n_d    = {}", fmt_num(n_drive)).unwrap();
    writeln!(report, "shot-noise SNR S        = {}", fmt_num(snr)).unwrap();
    let mut t = CsvTable::new(["quantity", "value"]);
    t.push_labeled("sigma0", &[sigma0]);
    t.push_labeled("n_d", &[n_drive]);
    t.push_labeled("shot_noise_snr", &[snr]);
    Ok((report, t.render()))
}

/// `Δω₀/2π` [Hz] implied by a config's `[coupling]` and `[mechanical]`
/// sections.
pub fn config_delta_omega0_hz(cfg: &DeviceConfig) -> Result<f64> {
    let (_, g2) = cfg.coupling_values()?;
    Ok(to_hz(delta_omega0(g2, &cfg.mechanical_mode()?)))
}
