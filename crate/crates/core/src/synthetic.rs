//! Synthetic mirror-symmetric paddle geometries with analytic fields.
//!
//! Used by the examples, the golden runner and the tests wherever a known
//! parity structure is needed without an external field solver. The paddle
//! is the box `|x| <= a, |y| <= w/2, |z| <= t/2`; its sliding mechanical
//! mode displaces it rigidly along x, so only the two end facets at
//! `x = ±a` carry a nonzero `q·n̂` (`+1` and `−1`). The side facets are
//! included with `q·n̂ = 0`.
//!
//! A mode with x parity `σ` has `Ey ∝ cos(kx)` for `σ = +1` and
//! `Ey ∝ sin(kx)` for `σ = −1`, with `Ex` of the opposite parity, and a
//! Gaussian transverse profile.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::fieldio::{
    BoundaryFace, BoundaryMesh, DielectricContrast, MechanicalMode, OpticalMode, Parity,
    VolumeGrid, VolumeSample,
};
use crate::Result;

#[derive(Debug, Clone)]
pub struct MirroredPaddle {
    pub half_length: f64,
    pub width: f64,
    pub thickness: f64,
    pub eps_in: f64,
    /// Facet subdivisions along x, y and z.
    pub cells: [usize; 3],
    /// Seed for the face ordering; faces are shuffled so that mirror
    /// cancellation happens in the arithmetic, not by construction order.
    pub order_seed: u64,
}

impl Default for MirroredPaddle {
    fn default() -> Self {
        Self {
            half_length: 479e-9,
            width: 500e-9,
            thickness: 220e-9,
            eps_in: 3.48 * 3.48,
            cells: [12, 10, 6],
            order_seed: 7,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SyntheticMode {
    pub label: String,
    /// [rad/s]
    pub omega: f64,
    /// Parity of `Ey` under `x → −x`.
    pub sigma_x: i64,
    pub e_amplitude: f64,
    /// Amplitude of the normal displacement field on the end facets.
    pub d_amplitude: f64,
    /// Longitudinal wavenumber [1/m].
    pub wavenumber: f64,
}

impl SyntheticMode {
    pub fn new(label: &str, omega: f64, sigma_x: i64, wavenumber: f64) -> Self {
        Self {
            label: label.to_string(),
            omega,
            sigma_x,
            e_amplitude: 1.0,
            d_amplitude: 0.5,
            wavenumber,
        }
    }
}

impl MirroredPaddle {
    pub fn contrast(&self) -> DielectricContrast {
        DielectricContrast::new(self.eps_in, 1.0).expect("eps_in > 1")
    }

    /// Rigid sliding mode along x; its permittivity change is odd in x.
    pub fn sliding_mode(&self, label: &str, omega_m: f64, mass: f64, q_mech: f64) -> Result<MechanicalMode> {
        MechanicalMode::new(label, omega_m, mass, q_mech, Parity::new(-1, 1, 1)?)
    }

    fn profile(&self, spec: &SyntheticMode, x: f64, y: f64, z: f64) -> (f64, f64) {
        let s = 0.35 * self.width;
        let envelope = (-(y * y + z * z) / (2.0 * s * s)).exp();
        let (even, odd) = ((spec.wavenumber * x).cos(), (spec.wavenumber * x).sin());
        let (ey, ex) = if spec.sigma_x == 1 { (even, odd) } else { (odd, even) };
        (spec.e_amplitude * ey * envelope, spec.d_amplitude * ex * envelope)
    }

    fn faces(&self, spec: &SyntheticMode) -> Vec<BoundaryFace> {
        let [nx, ny, nz] = self.cells;
        let (a, w, t) = (self.half_length, self.width, self.thickness);
        let (dx, dy, dz) = (2.0 * a / nx as f64, w / ny as f64, t / nz as f64);
        let mid = |i: usize, n: usize, len: f64| -0.5 * len + (i as f64 + 0.5) * len / n as f64;
        let mut faces = Vec::new();
        for sign in [1.0, -1.0] {
            let x = sign * a;
            for j in 0..ny {
                for k in 0..nz {
                    let (y, z) = (mid(j, ny, w), mid(k, nz, t));
                    let (ey, dn) = self.profile(spec, x, y, z);
                    faces.push(BoundaryFace {
                        centroid: [x, y, z],
                        normal: [sign, 0.0, 0.0],
                        area: dy * dz,
                        normal_displacement: sign,
                        e_par: [0.0, ey, 0.0],
                        d_perp: [dn, 0.0, 0.0],
                    });
                }
            }
            let y = sign * 0.5 * w;
            for i in 0..nx {
                for k in 0..nz {
                    let (x, z) = (mid(i, nx, 2.0 * a), mid(k, nz, t));
                    let (ey, ex) = self.profile(spec, x, y, z);
                    faces.push(BoundaryFace {
                        centroid: [x, y, z],
                        normal: [0.0, sign, 0.0],
                        area: dx * dz,
                        normal_displacement: 0.0,
                        e_par: [ex / self.eps_in, 0.0, 0.0],
                        d_perp: [0.0, self.eps_in * ey, 0.0],
                    });
                }
            }
        }
        faces.shuffle(&mut ChaCha8Rng::seed_from_u64(self.order_seed));
        faces
    }

    fn volume(&self, spec: &SyntheticMode) -> Vec<VolumeSample> {
        let [nx, ny, nz] = self.cells;
        let (a, w, t) = (self.half_length, self.width, self.thickness);
        let dv = (2.0 * a / nx as f64) * (w / ny as f64) * (t / nz as f64);
        let mid = |i: usize, n: usize, len: f64| -0.5 * len + (i as f64 + 0.5) * len / n as f64;
        let mut out = Vec::with_capacity(nx * ny * nz);
        for i in 0..nx {
            for j in 0..ny {
                for k in 0..nz {
                    let (x, y, z) = (mid(i, nx, 2.0 * a), mid(j, ny, w), mid(k, nz, t));
                    let (ey, ex) = self.profile(spec, x, y, z);
                    out.push(VolumeSample {
                        position: [x, y, z],
                        cell_volume: dv,
                        epsilon: self.eps_in,
                        e_field: [ex / self.eps_in, ey, 0.0],
                    });
                }
            }
        }
        out
    }

    /// Builds the sampled optical mode, with boundary samples registered
    /// under `mech_label`.
    pub fn optical_mode(&self, spec: &SyntheticMode, mech_label: &str) -> Result<OpticalMode> {
        let grid = VolumeGrid::new(self.volume(spec))?;
        let mesh = BoundaryMesh::new(self.faces(spec))?;
        let parity = Parity::new(spec.sigma_x, 1, 1)?;
        Ok(OpticalMode::new(&spec.label, spec.omega, 1.3e4, parity, grid)?.with_boundary(mech_label, mesh))
    }
}
