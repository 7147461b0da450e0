//! Interchange data model for discretized optical mode fields and
//! mechanical boundary displacements.
//!
//! Two plain-text formats are supported, both whitespace separated with one
//! sample per row:
//!
//! ```text
//! #omx-volume v1
//! x y z cell_volume epsilon Ex Ey Ez
//!
//! #omx-boundary v1
//! x y z nx ny nz area qn ex ey ez dx dy dz
//! ```
//!
//! Lines starting with `#` after the header and blank lines are ignored.
//! Fields are real valued; rows carrying imaginary parts are rejected.
//! `d_perp` is the normal displacement field `ε_r E⊥` with the vacuum
//! permittivity factored out, so it shares units with `e_par`.

mod boundary;
mod mode;
mod text;
mod volume;

pub use boundary::{load_boundary_mesh, BoundaryFace, BoundaryMesh};
pub use mode::{
    load_optical_mode, mode_norm, DielectricContrast, MechanicalMode, OpticalMode, Parity,
};
pub use volume::{load_volume_grid, VolumeGrid, VolumeSample};

pub type Vec3 = [f64; 3];

pub(crate) fn dot(a: &Vec3, b: &Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn norm(a: &Vec3) -> f64 {
    dot(a, a).sqrt()
}
