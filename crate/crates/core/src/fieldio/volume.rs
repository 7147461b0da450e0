use std::path::Path;

use super::text::{parse_rows, read_file, write_row};
use super::{dot, Vec3};
use crate::sum::pairwise_sum_by;
use crate::{Error, Result};

pub const VOLUME_HEADER: &str = "#omx-volume v1";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeSample {
    pub position: Vec3,
    /// Quadrature weight [m³].
    pub cell_volume: f64,
    /// Relative permittivity.
    pub epsilon: f64,
    pub e_field: Vec3,
}

/// Point samples of a mode field with midpoint-rule quadrature weights.
#[derive(Debug, Clone, PartialEq)]
pub struct VolumeGrid {
    samples: Vec<VolumeSample>,
}

impl VolumeGrid {
    pub fn new(samples: Vec<VolumeSample>) -> Result<Self> {
        for (i, s) in samples.iter().enumerate() {
            check_sample(s).map_err(|m| Error::invalid("volume grid", format!("point {i}: {m}")))?;
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[VolumeSample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// `Σ ε |E|² dV` over the grid.
    pub fn norm(&self) -> Result<f64> {
        if self.samples.is_empty() {
            return Err(Error::EmptyGrid);
        }
        Ok(pairwise_sum_by(&self.samples, |s| {
            s.epsilon * dot(&s.e_field, &s.e_field) * s.cell_volume
        }))
    }

    /// Copy with every field sample multiplied by `alpha`.
    pub fn scaled(&self, alpha: f64) -> Self {
        let samples = self
            .samples
            .iter()
            .map(|s| VolumeSample {
                e_field: s.e_field.map(|c| c * alpha),
                ..*s
            })
            .collect();
        Self { samples }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{VOLUME_HEADER}\n");
        for s in &self.samples {
            let p = s.position;
            let e = s.e_field;
            write_row(
                &mut out,
                &[p[0], p[1], p[2], s.cell_volume, s.epsilon, e[0], e[1], e[2]],
            );
        }
        out
    }

    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let rows = parse_rows(path, text, VOLUME_HEADER, 8, 11)?;
        let mut samples = Vec::with_capacity(rows.len());
        for row in rows {
            let v = &row.values;
            let s = VolumeSample {
                position: [v[0], v[1], v[2]],
                cell_volume: v[3],
                epsilon: v[4],
                e_field: [v[5], v[6], v[7]],
            };
            check_sample(&s).map_err(|message| Error::Parse {
                path: path.to_path_buf(),
                line: row.line,
                message,
            })?;
            samples.push(s);
        }
        Ok(Self { samples })
    }
}

fn check_sample(s: &VolumeSample) -> std::result::Result<(), String> {
    if !(s.cell_volume > 0.0) {
        return Err(format!("non-positive cell volume {}", s.cell_volume));
    }
    if !(s.epsilon >= 1.0) {
        return Err(format!("relative permittivity {} < 1", s.epsilon));
    }
    Ok(())
}

pub fn load_volume_grid(path: impl AsRef<Path>) -> Result<VolumeGrid> {
    let path = path.as_ref();
    VolumeGrid::parse(path, &read_file(path)?)
}
