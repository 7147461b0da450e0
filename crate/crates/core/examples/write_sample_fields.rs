//! Writes a synthetic seven-mode paddle dataset in the interchange formats:
//! one volume grid and one boundary mesh per optical mode, a metadata file
//! per mode, and a device config whose `[fields]` section lists them.
//!
//! ```text
//! cargo run --example write_sample_fields -- [output_dir]
//! cargo run --bin omx -- coupling [output_dir]/device.toml
//! ```

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::PathBuf;

use omx::output::write_atomic;
use omx::synthetic::{MirroredPaddle, SyntheticMode};

/// `(label, frequency [THz], x parity, wavenumber in units of π/a, amplitude)`
const MODES: [(&str, f64, i64, f64, f64); 7] = [
    ("M1", 191.0, 1, 0.5, 1.0),
    ("M2", 196.0, 1, 1.0, 0.8),
    ("M3", 199.0, -1, 0.8, 0.6),
    ("M4", 203.0, -1, 1.2, 1.0),
    ("M5", 186.0, -1, 0.6, 0.3),
    ("M6", 210.0, 1, 1.6, 0.5),
    ("M7", 214.0, -1, 1.8, 0.9),
];

fn main() -> omx::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/paddle"));
    std::fs::create_dir_all(&dir).map_err(|source| omx::Error::Io {
        path: dir.clone(),
        source,
    })?;
    let paddle = MirroredPaddle::default();
    let k = PI / paddle.half_length;
    let mut listed = Vec::new();
    for (label, thz, sigma, kk, amp) in MODES {
        let mut spec = SyntheticMode::new(label, TAU * thz * 1e12, sigma, kk * k);
        spec.e_amplitude = amp;
        let mode = paddle.optical_mode(&spec, "S")?;
        let grid_file = format!("{label}_volume.txt");
        let mesh_file = format!("{label}_boundary.txt");
        write_atomic(dir.join(&grid_file), &mode.volume_grid.to_text())?;
        write_atomic(dir.join(&mesh_file), &mode.boundary_for("S")?.to_text())?;
        let meta = format!(
            "label = \"{label}\"\nomega_hz = {:e}\nq_optical = {:e}\nparity_x = {sigma}\nparity_y = 1\nparity_z = 1\nvolume_grid = \"{grid_file}\"\n\n[boundary_mesh]\nS = \"{mesh_file}\"\n",
            thz * 1e12,
            mode.q_optical
        );
        let meta_file = format!("{label}.toml");
        write_atomic(dir.join(&meta_file), &meta)?;
        listed.push(meta_file);
    }
    let mut device = String::new();
    writeln!(device, "# Synthetic mirrored paddle, sliding mode.").unwrap();
    writeln!(device, "\n[mechanical]\nlabel = \"S\"\nf_m_hz = 5.5e6\nmass_kg = 450e-18\nq_m = 1e3\nparity_x = -1").unwrap();
    writeln!(
        device,
        "\n[fields]\ntarget = \"M1\"\neps_in = {:e}\neps_out = 1.0\nmodes = [{}]",
        paddle.eps_in,
        listed.iter().map(|f| format!("\"{f}\"")).collect::<Vec<_>>().join(", ")
    )
    .unwrap();
    write_atomic(dir.join("device.toml"), &device)?;
    println!("wrote {} modes to {}", MODES.len(), dir.display());
    Ok(())
}
