//! Physical constants (CODATA 2018 exact values).

/// Reduced Planck constant [J·s].
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant [J/K].
pub const K_B: f64 = 1.380_649e-23;

/// Table printed by `omx --version`.
pub fn table() -> String {
    format!("hbar = {HBAR:e} J s\nk_B  = {K_B:e} J/K\n")
}
