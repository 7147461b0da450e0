//! Conversions between SI and the reporting units used in CSV output.
//!
//! Coupling rates are reported "per 2π", i.e. in ordinary Hz.

use std::f64::consts::TAU;

const NM: f64 = 1e-9;

/// rad/s per m² → Hz per nm².
pub fn g2_to_hz_per_nm2(g2: f64) -> f64 {
    g2 / TAU * NM * NM
}

/// Hz per nm² → rad/s per m².
pub fn g2_from_hz_per_nm2(g2_hz: f64) -> f64 {
    g2_hz * TAU / (NM * NM)
}

/// rad/s per m → Hz per nm.
pub fn g1_to_hz_per_nm(g1: f64) -> f64 {
    g1 / TAU * NM
}

/// Hz per nm → rad/s per m.
pub fn g1_from_hz_per_nm(g1_hz: f64) -> f64 {
    g1_hz * TAU / NM
}

/// rad/s → Hz.
pub fn to_hz(omega: f64) -> f64 {
    omega / TAU
}

/// Hz → rad/s.
pub fn from_hz(f: f64) -> f64 {
    f * TAU
}
