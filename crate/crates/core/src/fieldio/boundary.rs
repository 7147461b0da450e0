use std::path::Path;

use super::text::{parse_rows, read_file, write_row};
use super::{dot, norm, Vec3};
use crate::{Error, Result};

pub const BOUNDARY_HEADER: &str = "#omx-boundary v1";

const NORMAL_TOL: f64 = 1e-9;
const DIRECTION_TOL: f64 = 1e-6;

/// One surface element of the dielectric boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryFace {
    pub centroid: Vec3,
    /// Outward unit normal.
    pub normal: Vec3,
    /// [m²]
    pub area: f64,
    /// Normalized boundary displacement `q·n̂`, with `max |Q| = 1`.
    pub normal_displacement: f64,
    /// Tangential electric field.
    pub e_par: Vec3,
    /// Normal displacement field, `ε_r E⊥`.
    pub d_perp: Vec3,
}

impl BoundaryFace {
    fn check(&self) -> std::result::Result<(), String> {
        let n = norm(&self.normal);
        if (n - 1.0).abs() > NORMAL_TOL {
            return Err(format!("normal is not unit length (|n| = {n})"));
        }
        if !(self.area > 0.0) {
            return Err(format!("non-positive area {}", self.area));
        }
        if self.normal_displacement.abs() > 1.0 {
            return Err(format!(
                "|q·n| = {} exceeds 1",
                self.normal_displacement.abs()
            ));
        }
        let e = norm(&self.e_par);
        if dot(&self.e_par, &self.normal).abs() > DIRECTION_TOL * e {
            return Err("e_par is not tangential to the surface".into());
        }
        let d_n = dot(&self.d_perp, &self.normal);
        let residual: Vec3 = std::array::from_fn(|k| self.d_perp[k] - d_n * self.normal[k]);
        if norm(&residual) > DIRECTION_TOL * norm(&self.d_perp) {
            return Err("d_perp is not parallel to the surface normal".into());
        }
        Ok(())
    }

    fn values(&self) -> [f64; 14] {
        let (c, n, e, d) = (self.centroid, self.normal, self.e_par, self.d_perp);
        [
            c[0], c[1], c[2], n[0], n[1], n[2], self.area, self.normal_displacement, e[0], e[1],
            e[2], d[0], d[1], d[2],
        ]
    }
}

/// Boundary samples of one optical mode for one mechanical displacement
/// profile.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMesh {
    faces: Vec<BoundaryFace>,
}

impl BoundaryMesh {
    pub fn new(faces: Vec<BoundaryFace>) -> Result<Self> {
        for (i, f) in faces.iter().enumerate() {
            f.check()
                .map_err(|m| Error::invalid("boundary mesh", format!("face {i}: {m}")))?;
        }
        Ok(Self { faces })
    }

    pub fn faces(&self) -> &[BoundaryFace] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn total_area(&self) -> f64 {
        crate::sum::pairwise_sum_by(&self.faces, |f| f.area)
    }

    /// Copy with both field samples multiplied by `alpha`.
    pub fn scaled(&self, alpha: f64) -> Self {
        let faces = self
            .faces
            .iter()
            .map(|f| BoundaryFace {
                e_par: f.e_par.map(|c| c * alpha),
                d_perp: f.d_perp.map(|c| c * alpha),
                ..*f
            })
            .collect();
        Self { faces }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{BOUNDARY_HEADER}\n");
        for f in &self.faces {
            write_row(&mut out, &f.values());
        }
        out
    }

    pub fn parse(path: &Path, text: &str) -> Result<Self> {
        let rows = parse_rows(path, text, BOUNDARY_HEADER, 14, 20)?;
        let mut faces = Vec::with_capacity(rows.len());
        for row in rows {
            let v = &row.values;
            let f = BoundaryFace {
                centroid: [v[0], v[1], v[2]],
                normal: [v[3], v[4], v[5]],
                area: v[6],
                normal_displacement: v[7],
                e_par: [v[8], v[9], v[10]],
                d_perp: [v[11], v[12], v[13]],
            };
            f.check().map_err(|message| Error::Parse {
                path: path.to_path_buf(),
                line: row.line,
                message,
            })?;
            faces.push(f);
        }
        Ok(Self { faces })
    }
}

pub fn load_boundary_mesh(path: impl AsRef<Path>) -> Result<BoundaryMesh> {
    let path = path.as_ref();
    BoundaryMesh::parse(path, &read_file(path)?)
}
