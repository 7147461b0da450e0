//! Device configuration files.
//!
//! Flat TOML with one level of sections:
//!
//! ```toml
//! [mechanical]
//! label = "S"
//! f_m_hz = 0.35e6
//! mass_kg = 589e-18
//! q_m = 1e3
//! parity_x = -1          # parity of the induced Δε, default +1
//!
//! [optical]
//! f_o_hz = 191e12
//! q_o = 1.4e4
//! t_o = 0.90
//!
//! [coupling]             # optional precomputed values
//! g1_hz_per_nm = 0.0
//! g2_hz_per_nm2 = -400e6
//!
//! [environment]
//! temperature_k = 300.0
//! power_w = 100e-6
//! nep_w_per_rthz = 2.5e-12
//!
//! [fields]               # optional, for computing coupling from field files
//! target = "M1"
//! eps_in = 12.1104
//! eps_out = 1.0
//! modes = ["M1.toml", "M2.toml"]
//! ```
//!
//! Mode file paths are relative to the config file.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::fieldio::{load_optical_mode, DielectricContrast, MechanicalMode, OpticalMode, Parity};
use crate::spectra::CavityTransmission;
use crate::units::{from_hz, g1_from_hz_per_nm, g2_from_hz_per_nm2};
use crate::{Error, Result};

fn one() -> i64 {
    1
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MechanicalSection {
    pub label: String,
    pub f_m_hz: f64,
    pub mass_kg: f64,
    pub q_m: f64,
    #[serde(default = "one")]
    pub parity_x: i64,
    #[serde(default = "one")]
    pub parity_y: i64,
    #[serde(default = "one")]
    pub parity_z: i64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpticalSection {
    pub f_o_hz: f64,
    pub q_o: f64,
    pub t_o: f64,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CouplingSection {
    #[serde(default)]
    pub g1_hz_per_nm: f64,
    pub g2_hz_per_nm2: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnvironmentSection {
    pub temperature_k: f64,
    pub power_w: f64,
    pub nep_w_per_rthz: f64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldsSection {
    pub target: String,
    pub eps_in: f64,
    #[serde(default = "eps_vacuum")]
    pub eps_out: f64,
    pub modes: Vec<PathBuf>,
}

fn eps_vacuum() -> f64 {
    1.0
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mechanical: MechanicalSection,
    optical: Option<OpticalSection>,
    coupling: Option<CouplingSection>,
    environment: Option<EnvironmentSection>,
    fields: Option<FieldsSection>,
}

#[derive(Debug, Clone)]
pub struct DeviceConfig {
    pub path: PathBuf,
    pub mechanical: MechanicalSection,
    pub optical: Option<OpticalSection>,
    pub coupling: Option<CouplingSection>,
    pub environment: Option<EnvironmentSection>,
    pub fields: Option<FieldsSection>,
    base_dir: PathBuf,
}

impl DeviceConfig {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
        Self::parse(&text, path, base)
    }

    /// Parses config text; `path` is used in messages and `base_dir`
    /// resolves mode files.
    pub fn parse(text: &str, path: impl Into<PathBuf>, base_dir: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config {
            path: path.clone(),
            message: e.to_string(),
        })?;
        let cfg = Self {
            path,
            mechanical: raw.mechanical,
            optical: raw.optical,
            coupling: raw.coupling,
            environment: raw.environment,
            fields: raw.fields,
            base_dir: base_dir.into(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Config {
            path: self.path.clone(),
            message: message.into(),
        }
    }

    fn validate(&self) -> Result<()> {
        let m = &self.mechanical;
        let mut positive = vec![("f_m_hz", m.f_m_hz), ("mass_kg", m.mass_kg), ("q_m", m.q_m)];
        if let Some(o) = &self.optical {
            positive.extend([("f_o_hz", o.f_o_hz), ("q_o", o.q_o), ("t_o", o.t_o)]);
        }
        if let Some(e) = &self.environment {
            positive.extend([
                ("temperature_k", e.temperature_k),
                ("power_w", e.power_w),
                ("nep_w_per_rthz", e.nep_w_per_rthz),
            ]);
        }
        if let Some(f) = &self.fields {
            positive.extend([("eps_in", f.eps_in), ("eps_out", f.eps_out)]);
        }
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(self.error(format!("{name} must be positive, got {v}")));
            }
        }
        if let Some(f) = &self.fields {
            for p in &f.modes {
                let full = self.base_dir.join(p);
                if !full.is_file() {
                    return Err(Error::Io {
                        path: full,
                        source: std::io::Error::new(std::io::ErrorKind::NotFound, "mode file not found"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn mechanical_mode(&self) -> Result<MechanicalMode> {
        let m = &self.mechanical;
        MechanicalMode::new(
            &m.label,
            from_hz(m.f_m_hz),
            m.mass_kg,
            m.q_m,
            Parity::new(m.parity_x, m.parity_y, m.parity_z)?,
        )
    }

    pub fn cavity(&self) -> Result<CavityTransmission> {
        let o = self
            .optical
            .as_ref()
            .ok_or_else(|| self.error("missing [optical] section"))?;
        CavityTransmission::new(from_hz(o.f_o_hz), o.q_o, o.t_o)
    }

    pub fn environment(&self) -> Result<&EnvironmentSection> {
        self.environment
            .as_ref()
            .ok_or_else(|| self.error("missing [environment] section"))
    }

    /// `(g1 [rad/s/m], g2 [rad/s/m²])` from the `[coupling]` section.
    pub fn coupling_values(&self) -> Result<(f64, f64)> {
        let c = self
            .coupling
            .as_ref()
            .ok_or_else(|| self.error("missing [coupling] section"))?;
        Ok((g1_from_hz_per_nm(c.g1_hz_per_nm), g2_from_hz_per_nm2(c.g2_hz_per_nm2)))
    }

    pub fn fields(&self) -> Result<&FieldsSection> {
        self.fields
            .as_ref()
            .ok_or_else(|| self.error("missing [fields] section"))
    }

    pub fn contrast(&self) -> Result<DielectricContrast> {
        let f = self.fields()?;
        DielectricContrast::new(f.eps_in, f.eps_out)
    }

    /// Loads every optical mode listed under `[fields]`; returns the list
    /// and the index of the target mode.
    pub fn load_modes(&self) -> Result<(Vec<OpticalMode>, usize)> {
        let f = self.fields()?;
        let modes = f
            .modes
            .iter()
            .map(|p| load_optical_mode(self.base_dir.join(p)))
            .collect::<Result<Vec<_>>>()?;
        let target = modes
            .iter()
            .position(|m| m.label == f.target)
            .ok_or_else(|| self.error(format!("target mode {} is not among the listed modes", f.target)))?;
        Ok((modes, target))
    }
}
