use log::warn;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::constants::K_B;
use crate::fieldio::MechanicalMode;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub mech: MechanicalMode,
    /// [K]
    pub temperature: f64,
    /// [s]
    pub dt: f64,
    pub n_steps: usize,
    pub n_segments: usize,
    pub seed: u64,
    /// Initial `(x, v)`. `None` draws it from the stationary distribution.
    pub initial: Option<(f64, f64)>,
}

impl SimulationConfig {
    pub fn validate(&self) -> Result<()> {
        let wdt = self.dt * self.mech.omega_m;
        if !(self.dt > 0.0) {
            return Err(Error::invalid("time step", format!("must be positive, got {}", self.dt)));
        }
        if wdt >= 0.3 {
            return Err(Error::UnstableStep(wdt));
        }
        if !(self.temperature >= 0.0) {
            return Err(Error::invalid("temperature", format!("{} < 0", self.temperature)));
        }
        if self.n_steps < 2 || self.n_segments == 0 {
            return Err(Error::invalid("simulation", "need n_steps >= 2 and n_segments >= 1"));
        }
        let decay_times = self.n_steps as f64 * self.dt * self.mech.gamma();
        if decay_times < 50.0 {
            warn!("simulation covers only {decay_times:.1} mechanical decay times (< 50)");
        }
        Ok(())
    }
}

/// Uniformly sampled trajectory starting at `t = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub dt: f64,
    pub positions: Vec<f64>,
    pub velocities: Vec<f64>,
    /// Mechanical frequency of the simulated mode, when known; used to
    /// check periodogram segment lengths.
    pub omega_m: Option<f64>,
}

impl Trajectory {
    /// Positions-only trajectory; velocities are set to zero.
    pub fn from_positions(dt: f64, positions: Vec<f64>) -> Self {
        let velocities = vec![0.0; positions.len()];
        Self {
            dt,
            positions,
            velocities,
            omega_m: None,
        }
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| i as f64 * self.dt)
    }
}

/// Exact one-step propagator of the damped oscillator and the Cholesky
/// factor of the injected noise covariance.
struct Propagator {
    phi: [[f64; 2]; 2],
    chol: [[f64; 2]; 2],
}

impl Propagator {
    fn new(omega_m: f64, gamma: f64, dt: f64, var_x: f64, var_v: f64) -> Self {
        let half = 0.5 * gamma;
        let disc = omega_m * omega_m - half * half;
        // c = C(dt), s = S(dt)/ω_d generalized to all damping regimes.
        let (c, s) = if disc > 0.0 {
            let wd = disc.sqrt();
            ((wd * dt).cos(), (wd * dt).sin() / wd)
        } else if disc < 0.0 {
            let wd = (-disc).sqrt();
            ((wd * dt).cosh(), (wd * dt).sinh() / wd)
        } else {
            (1.0, dt)
        };
        let e = (-half * dt).exp();
        let phi = [
            [e * (c + half * s), e * s],
            [-e * omega_m * omega_m * s, e * (c - half * s)],
        ];
        // Stationary covariance Σ = diag(var_x, var_v) is preserved by the
        // exact update, so the injected covariance is Σ − Φ Σ Φᵀ.
        let q00 = var_x - (phi[0][0] * phi[0][0] * var_x + phi[0][1] * phi[0][1] * var_v);
        let q01 = -(phi[0][0] * phi[1][0] * var_x + phi[0][1] * phi[1][1] * var_v);
        let q11 = var_v - (phi[1][0] * phi[1][0] * var_x + phi[1][1] * phi[1][1] * var_v);
        let l00 = q00.max(0.0).sqrt();
        let l10 = if l00 > 0.0 { q01 / l00 } else { 0.0 };
        let l11 = (q11 - l10 * l10).max(0.0).sqrt();
        Self {
            phi,
            chol: [[l00, 0.0], [l10, l11]],
        }
    }
}

/// Integrates the thermally driven oscillator with the exact
/// Ornstein-Uhlenbeck update for the `(x, v)` pair. Deterministic for a
/// fixed seed.
pub fn simulate(config: &SimulationConfig) -> Result<Trajectory> {
    config.validate()?;
    let mech = &config.mech;
    let var_x = K_B * config.temperature / (mech.mass * mech.omega_m * mech.omega_m);
    let var_v = K_B * config.temperature / mech.mass;
    let prop = Propagator::new(mech.omega_m, mech.gamma(), config.dt, var_x, var_v);

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut normal = || -> f64 { StandardNormal.sample(&mut rng) };
    let (mut x, mut v) = match config.initial {
        Some(s) => s,
        None => (var_x.sqrt() * normal(), var_v.sqrt() * normal()),
    };

    let n = config.n_steps;
    let mut positions = Vec::with_capacity(n);
    let mut velocities = Vec::with_capacity(n);
    let [[p00, p01], [p10, p11]] = prop.phi;
    let [[l00, _], [l10, l11]] = prop.chol;
    for _ in 0..n {
        positions.push(x);
        velocities.push(v);
        let (z0, z1) = (normal(), normal());
        let nx = p00 * x + p01 * v + l00 * z0;
        let nv = p10 * x + p11 * v + l10 * z0 + l11 * z1;
        x = nx;
        v = nv;
    }
    Ok(Trajectory {
        dt: config.dt,
        positions,
        velocities,
        omega_m: Some(mech.omega_m),
    })
}
