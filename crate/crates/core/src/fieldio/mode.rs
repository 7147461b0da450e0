use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::text::read_file;
use super::{load_boundary_mesh, load_volume_grid, BoundaryMesh, VolumeGrid};
use crate::constants::HBAR;
use crate::units::from_hz;
use crate::{Error, Result};

/// Mirror parity `(σx, σy, σz)`, each exactly ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Parity([i8; 3]);

impl Parity {
    pub const EVEN: Parity = Parity([1, 1, 1]);

    pub fn new(x: i64, y: i64, z: i64) -> Result<Self> {
        let mut out = [0i8; 3];
        for (slot, v) in out.iter_mut().zip([x, y, z]) {
            *slot = match v {
                1 => 1,
                -1 => -1,
                _ => return Err(Error::invalid("parity", format!("entry {v} is not ±1"))),
            };
        }
        Ok(Parity(out))
    }

    pub fn axes(&self) -> [i8; 3] {
        self.0
    }
}

/// Permittivity step across the moving boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DielectricContrast {
    eps_in: f64,
    eps_out: f64,
}

impl DielectricContrast {
    pub fn new(eps_in: f64, eps_out: f64) -> Result<Self> {
        if !(eps_out >= 1.0 && eps_in > eps_out) {
            return Err(Error::invalid(
                "dielectric contrast",
                format!("need eps_in > eps_out >= 1, got {eps_in}, {eps_out}"),
            ));
        }
        Ok(Self { eps_in, eps_out })
    }

    /// Structure of refractive index `n` in vacuum.
    pub fn from_index(n: f64) -> Result<Self> {
        Self::new(n * n, 1.0)
    }

    pub fn eps_in(&self) -> f64 {
        self.eps_in
    }

    pub fn eps_out(&self) -> f64 {
        self.eps_out
    }

    /// `Δε = ε_in − ε_out`
    pub fn delta_eps(&self) -> f64 {
        self.eps_in - self.eps_out
    }

    /// `Δ(ε⁻¹) = 1/ε_out − 1/ε_in`
    pub fn delta_inv_eps(&self) -> f64 {
        1.0 / self.eps_out - 1.0 / self.eps_in
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OpticalMode {
    pub label: String,
    /// [rad/s]
    pub omega: f64,
    pub q_optical: f64,
    pub parity: Parity,
    pub volume_grid: VolumeGrid,
    /// Boundary samples keyed by mechanical-mode label.
    pub boundary_samples: BTreeMap<String, BoundaryMesh>,
}

impl OpticalMode {
    pub fn new(
        label: impl Into<String>,
        omega: f64,
        q_optical: f64,
        parity: Parity,
        volume_grid: VolumeGrid,
    ) -> Result<Self> {
        if !(omega > 0.0) || !(q_optical > 0.0) {
            return Err(Error::invalid(
                "optical mode",
                format!("omega and q_optical must be positive ({omega}, {q_optical})"),
            ));
        }
        Ok(Self {
            label: label.into(),
            omega,
            q_optical,
            parity,
            volume_grid,
            boundary_samples: BTreeMap::new(),
        })
    }

    pub fn with_boundary(mut self, mech_label: impl Into<String>, mesh: BoundaryMesh) -> Self {
        self.boundary_samples.insert(mech_label.into(), mesh);
        self
    }

    pub fn boundary_for(&self, mech_label: &str) -> Result<&BoundaryMesh> {
        self.boundary_samples
            .get(mech_label)
            .ok_or_else(|| Error::MissingSamples {
                mode: self.label.clone(),
                mech: mech_label.to_string(),
            })
    }

    /// Copy with all field samples (volume and boundary) scaled by `alpha`.
    pub fn scaled(&self, alpha: f64) -> Self {
        Self {
            volume_grid: self.volume_grid.scaled(alpha),
            boundary_samples: self
                .boundary_samples
                .iter()
                .map(|(k, m)| (k.clone(), m.scaled(alpha)))
                .collect(),
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MechanicalMode {
    pub label: String,
    /// [rad/s]
    pub omega_m: f64,
    /// Effective mass [kg].
    pub mass: f64,
    pub q_mech: f64,
    /// Parity of the induced permittivity change.
    pub parity_perturbation: Parity,
}

impl MechanicalMode {
    pub fn new(
        label: impl Into<String>,
        omega_m: f64,
        mass: f64,
        q_mech: f64,
        parity_perturbation: Parity,
    ) -> Result<Self> {
        if !(omega_m > 0.0 && mass > 0.0 && q_mech > 0.0) {
            return Err(Error::invalid(
                "mechanical mode",
                format!("omega_m, mass and q_mech must be positive ({omega_m}, {mass}, {q_mech})"),
            ));
        }
        Ok(Self {
            label: label.into(),
            omega_m,
            mass,
            q_mech,
            parity_perturbation,
        })
    }

    /// Energy damping rate `Γ = ω_m / Q_m` [rad/s].
    pub fn gamma(&self) -> f64 {
        self.omega_m / self.q_mech
    }

    /// `sqrt(ħ / (2 m ω_m))` [m].
    pub fn x_zpf(&self) -> f64 {
        (HBAR / (2.0 * self.mass * self.omega_m)).sqrt()
    }
}

/// `Σ ε |E|² dV` of the mode's volume samples.
pub fn mode_norm(mode: &OpticalMode) -> Result<f64> {
    mode.volume_grid.norm()
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModeMetadata {
    label: String,
    omega_hz: f64,
    q_optical: f64,
    parity_x: i64,
    parity_y: i64,
    parity_z: i64,
    volume_grid: PathBuf,
    #[serde(default)]
    boundary_mesh: BTreeMap<String, PathBuf>,
}

/// Loads a mode metadata file and the field files it references.
///
/// Relative field paths resolve against the metadata file's directory.
/// `omega_hz` is an ordinary frequency and is converted to rad/s.
pub fn load_optical_mode(path: impl AsRef<Path>) -> Result<OpticalMode> {
    let path = path.as_ref();
    let text = read_file(path)?;
    let meta: ModeMetadata = toml::from_str(&text).map_err(|e| Error::Config {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new("."));
    let parity = Parity::new(meta.parity_x, meta.parity_y, meta.parity_z)?;
    let grid = load_volume_grid(base.join(&meta.volume_grid))?;
    let mut mode = OpticalMode::new(meta.label, from_hz(meta.omega_hz), meta.q_optical, parity, grid)?;
    for (mech, file) in meta.boundary_mesh {
        let mesh = load_boundary_mesh(base.join(file))?;
        mode = mode.with_boundary(mech, mesh);
    }
    Ok(mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_rejects_non_unit_entries() {
        assert!(Parity::new(1, -1, 1).is_ok());
        assert!(Parity::new(0, 1, 1).is_err());
        assert!(Parity::new(1, 2, 1).is_err());
    }

    #[test]
    fn contrast_invariants() {
        assert!(DielectricContrast::new(1.0, 1.0).is_err());
        assert!(DielectricContrast::new(2.0, 0.5).is_err());
        let c = DielectricContrast::from_index(3.48).unwrap();
        assert!((c.delta_eps() - (3.48f64.powi(2) - 1.0)).abs() < 1e-12);
        assert!((c.delta_inv_eps() - (1.0 - 1.0 / 3.48f64.powi(2))).abs() < 1e-15);
    }

    #[test]
    fn mechanical_validation_and_zpf() {
        assert!(MechanicalMode::new("S", 0.0, 1.0, 1.0, Parity::EVEN).is_err());
        assert!(MechanicalMode::new("S", 1.0, -1.0, 1.0, Parity::EVEN).is_err());
        let m = MechanicalMode::new("S", 2.0, 3.0, 4.0, Parity::EVEN).unwrap();
        assert_eq!(m.gamma(), 0.5);
        assert!((m.x_zpf() - (HBAR / 12.0).sqrt()).abs() < 1e-30);
    }

    #[test]
    fn doubling_fields_quadruples_norm() {
        let grid = VolumeGrid::parse(
            Path::new("g"),
            "#omx-volume v1\n0 0 0 1e-27 12.1 0 2 0\n1e-9 0 0 2e-27 1 1 0 0\n",
        )
        .unwrap();
        let mode = OpticalMode::new("M1", 1.0, 1.0, Parity::EVEN, grid).unwrap();
        let n = mode_norm(&mode).unwrap();
        assert!((mode_norm(&mode.scaled(2.0)).unwrap() / n - 4.0).abs() < 1e-14);
    }
}
