//! First- and second-order optomechanical coupling from field samples.
//!
//! The matrix element `⟨E'|δε/δx|E⟩` is the moving-boundary surface
//! integral
//!
//! ```text
//! Σ_faces A (q·n̂) [ Δε e∥'·e∥ − Δ(ε⁻¹) d⊥'·d⊥ ]
//! ```
//!
//! and the mode normalization is `⟨E|ε|E⟩ = Σ ε |E|² dV`. From these:
//!
//! ```text
//! g1          = −(ω/2) ⟨E|δε|E⟩ / ⟨E|ε|E⟩
//! g2_self     =  (ω/2) ⟨E|δε|E⟩² / ⟨E|ε|E⟩²
//! g2_{ω',ω}   = −ω³/(ω'² − ω²) ⟨E'|δε|E⟩² / (⟨E'|ε|E'⟩ ⟨E|ε|E⟩)
//! ```

mod fit;
mod oracle;
mod perturbation;

pub use fit::{fit_g2_from_sweep, SweepFit};
pub use oracle::{cross_coupling_rate, two_mode_curvature, two_mode_oracle};
pub use perturbation::{
    delta_omega0, g1_coefficient, g2_cross_term, g2_self_term, g2_total, overlap_matrix_element,
    overlap_quadrature, parity_allows_coupling, CouplingResult, Quadrature, ZpfState,
    DEGENERACY_GUARD,
};
