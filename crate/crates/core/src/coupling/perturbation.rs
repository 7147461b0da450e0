use crate::fieldio::{
    dot, mode_norm, norm, BoundaryMesh, DielectricContrast, MechanicalMode, OpticalMode,
};
use crate::sum::pairwise_sum;
use crate::{Error, Result};

/// Minimum relative splitting `|ω' − ω| / ω` accepted by the cross term.
pub const DEGENERACY_GUARD: f64 = 1e-9;

const GEOMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZpfState {
    /// [m]
    pub x_zpf: f64,
}

impl ZpfState {
    pub fn of(mech: &MechanicalMode) -> Self {
        Self {
            x_zpf: mech.x_zpf(),
        }
    }
}

/// Result of a surface quadrature: the signed sum and the sum of absolute
/// summands, the natural scale for judging cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub abs_sum: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CouplingResult {
    /// [rad/s per m]
    pub g1: f64,
    /// Cross terms keyed `"<target>-<other>"`, in input order [rad/s per m²].
    pub g2_contributions: Vec<(String, f64)>,
    pub g2_self: f64,
    pub g2_total: f64,
    /// `|g2_total| x_zpf²` [rad/s]
    pub delta_omega0: f64,
}

impl CouplingResult {
    pub fn contribution(&self, pair_label: &str) -> Option<f64> {
        self.g2_contributions
            .iter()
            .find(|(l, _)| l == pair_label)
            .map(|(_, v)| *v)
    }
}

/// Selection rule: along axes where the perturbation is odd the two modes
/// need opposite parity, along even axes equal parity.
pub fn parity_allows_coupling(
    mode_a: &OpticalMode,
    mode_b: &OpticalMode,
    mech: &MechanicalMode,
) -> bool {
    let a = mode_a.parity.axes();
    let b = mode_b.parity.axes();
    let p = mech.parity_perturbation.axes();
    (0..3).all(|k| a[k] * b[k] == p[k])
}

fn same_geometry(a: &BoundaryMesh, b: &BoundaryMesh) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::GeometryMismatch {
            face: a.len().min(b.len()),
        });
    }
    for (i, (fa, fb)) in a.faces().iter().zip(b.faces()).enumerate() {
        let scale = norm(&fa.centroid).max(fa.area.sqrt());
        let close = |x: f64, y: f64, s: f64| (x - y).abs() <= GEOMETRY_TOL * s;
        let ok = (0..3).all(|k| {
            close(fa.centroid[k], fb.centroid[k], scale) && close(fa.normal[k], fb.normal[k], 1.0)
        }) && close(fa.area, fb.area, fa.area)
            && close(fa.normal_displacement, fb.normal_displacement, 1.0);
        if !ok {
            return Err(Error::GeometryMismatch { face: i });
        }
    }
    Ok(())
}

/// Moving-boundary matrix element together with its summand scale.
pub fn overlap_quadrature(
    bm_a: &BoundaryMesh,
    bm_b: &BoundaryMesh,
    contrast: &DielectricContrast,
) -> Result<Quadrature> {
    same_geometry(bm_a, bm_b)?;
    let (de, dinv) = (contrast.delta_eps(), contrast.delta_inv_eps());
    let terms: Vec<f64> = bm_a
        .faces()
        .iter()
        .zip(bm_b.faces())
        .map(|(fa, fb)| {
            fa.area
                * fa.normal_displacement
                * (de * dot(&fa.e_par, &fb.e_par) - dinv * dot(&fa.d_perp, &fb.d_perp))
        })
        .collect();
    let abs: Vec<f64> = terms.iter().map(|t| t.abs()).collect();
    Ok(Quadrature {
        value: pairwise_sum(&terms),
        abs_sum: pairwise_sum(&abs),
    })
}

/// `⟨E_a|δε/δx|E_b⟩` evaluated on the boundary samples [field² m²].
pub fn overlap_matrix_element(
    bm_a: &BoundaryMesh,
    bm_b: &BoundaryMesh,
    contrast: &DielectricContrast,
) -> Result<f64> {
    overlap_quadrature(bm_a, bm_b, contrast).map(|q| q.value)
}

fn self_overlap(
    mode: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<f64> {
    let bm = mode.boundary_for(&mech.label)?;
    overlap_matrix_element(bm, bm, contrast)
}

/// Linear coupling `dω/dx` [rad/s per m]. Negative when the dielectric
/// grows into the field.
pub fn g1_coefficient(
    mode: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<f64> {
    let m = self_overlap(mode, mech, contrast)?;
    Ok(-0.5 * mode.omega * m / mode_norm(mode)?)
}

/// Self term of the quadratic coupling [rad/s per m²].
pub fn g2_self_term(
    mode: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<f64> {
    let m = self_overlap(mode, mech, contrast)?;
    let n = mode_norm(mode)?;
    Ok(0.5 * mode.omega * (m / n) * (m / n))
}

/// Cross term contributed to `mode` by `mode_other` [rad/s per m²].
pub fn g2_cross_term(
    mode_other: &OpticalMode,
    mode: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<f64> {
    let (w, wp) = (mode.omega, mode_other.omega);
    if (wp - w).abs() < DEGENERACY_GUARD * w {
        return Err(Error::Degenerate {
            omega_a: w,
            omega_b: wp,
        });
    }
    let m = overlap_matrix_element(
        mode_other.boundary_for(&mech.label)?,
        mode.boundary_for(&mech.label)?,
        contrast,
    )?;
    let overlap_sq = (m / mode_norm(mode_other)?) * (m / mode_norm(mode)?);
    // ω'² − ω² = (ω' − ω)(ω' + ω) keeps precision for close modes.
    Ok(-w * w * w / ((wp - w) * (wp + w)) * overlap_sq)
}

/// Full second-order coupling of `target`: self term plus the cross terms
/// of every other mode in `modes` (matched by label).
pub fn g2_total(
    modes: &[OpticalMode],
    target: &OpticalMode,
    mech: &MechanicalMode,
    contrast: &DielectricContrast,
) -> Result<CouplingResult> {
    let g1 = g1_coefficient(target, mech, contrast)?;
    let g2_self = g2_self_term(target, mech, contrast)?;
    let mut g2_contributions = Vec::new();
    for other in modes.iter().filter(|m| m.label != target.label) {
        let g = g2_cross_term(other, target, mech, contrast)?;
        g2_contributions.push((format!("{}-{}", target.label, other.label), g));
    }
    let mut terms = Vec::with_capacity(g2_contributions.len() + 1);
    terms.push(g2_self);
    terms.extend(g2_contributions.iter().map(|(_, g)| *g));
    let g2_total = pairwise_sum(&terms);
    Ok(CouplingResult {
        g1,
        g2_contributions,
        g2_self,
        g2_total,
        delta_omega0: delta_omega0(g2_total, mech),
    })
}

/// Two-phonon frequency shift `|g⁽²⁾| x_zpf²` [rad/s].
pub fn delta_omega0(g2: f64, mech: &MechanicalMode) -> f64 {
    let x_zpf = ZpfState::of(mech).x_zpf;
    g2.abs() * x_zpf * x_zpf
}
