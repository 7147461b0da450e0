use std::path::{Path, PathBuf};

use omx::fieldio::{
    load_boundary_mesh, load_optical_mode, load_volume_grid, mode_norm, BoundaryFace,
    BoundaryMesh, OpticalMode, Parity, VolumeGrid, VolumeSample,
};
use omx::Error;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn single_point_identity() {
    let g = VolumeGrid::new(vec![VolumeSample {
        position: [0.0; 3],
        cell_volume: 1e-27,
        epsilon: 1.0,
        e_field: [0.0, 0.0, 1.0],
    }])
    .unwrap();
    assert_eq!(g.norm().unwrap(), 1e-27);
}

#[test]
fn silicon_point() {
    let g = VolumeGrid::new(vec![VolumeSample {
        position: [0.0; 3],
        cell_volume: 1e-27,
        epsilon: 12.1,
        e_field: [0.0, 2.0, 0.0],
    }])
    .unwrap();
    assert!((g.norm().unwrap() / 4.84e-26 - 1.0).abs() < 1e-14);
}

#[test]
fn uniform_field_norm() {
    let samples = (0..50)
        .map(|i| VolumeSample {
            position: [i as f64, 0.0, 0.0],
            cell_volume: 0.02,
            epsilon: 2.0,
            e_field: [0.6, 0.0, 0.8],
        })
        .collect();
    let g = VolumeGrid::new(samples).unwrap();
    assert!((g.norm().unwrap() - 2.0).abs() < 1e-14);
}

#[test]
fn docs_sample_grid() {
    let g = load_volume_grid(data("grid3.txt")).unwrap();
    assert_eq!(g.len(), 3);
    // 1e-27·1·1 + 2e-27·12.1·4 + 1e-27·4·3
    assert!((g.norm().unwrap() / 1.098e-25 - 1.0).abs() < 1e-14);
}

#[test]
fn docs_sample_mesh() {
    let m = load_boundary_mesh(data("mesh4.txt")).unwrap();
    assert_eq!(m.len(), 4);
    assert!((m.total_area() / 7e-14 - 1.0).abs() < 1e-14);
}

#[test]
fn tangentiality_enforced() {
    let face = |e_par| BoundaryFace {
        centroid: [0.0; 3],
        normal: [1.0, 0.0, 0.0],
        area: 1.0,
        normal_displacement: 1.0,
        e_par,
        d_perp: [1.0, 0.0, 0.0],
    };
    assert!(BoundaryMesh::new(vec![face([0.0, 1.0, 0.0])]).is_ok());
    assert!(BoundaryMesh::new(vec![face([1.0, 0.0, 0.0])]).is_err());
}

#[test]
fn bad_row_reports_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.txt");
    let text = "#omx-volume v1\n# comment\n0 0 0 1 1 0 0 1\n\n0 0 0 1 1 0 0 1\n0 0 0 1 1 0 0 1\n0 0 0 -1 1 0 0 1\n";
    std::fs::write(&p, text).unwrap();
    match load_volume_grid(&p) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 7),
        other => panic!("expected parse error, got {other:?}"),
    }
}

#[test]
fn complex_rows_rejected() {
    let text = "#omx-volume v1\n0 0 0 1 1 0 0 1 0 0 0\n";
    let e = VolumeGrid::parse(Path::new("c.txt"), text).unwrap_err();
    assert!(e.to_string().contains("complex"), "{e}");
}

#[test]
fn missing_file_is_input_error() {
    let e = load_volume_grid(data("does_not_exist.txt")).unwrap_err();
    assert!(e.is_input_error());
}

#[test]
fn mode_metadata_loads_fields() {
    let m = load_optical_mode(data("sample_mode.toml")).unwrap();
    assert_eq!(m.label, "M1");
    assert!((m.omega / (std::f64::consts::TAU * 1.91e14) - 1.0).abs() < 1e-15);
    assert_eq!(m.parity, Parity::EVEN);
    assert_eq!(m.volume_grid.len(), 3);
    assert_eq!(m.boundary_for("S").unwrap().len(), 4);
    assert!(matches!(m.boundary_for("B"), Err(Error::MissingSamples { .. })));
    assert!((mode_norm(&m).unwrap() / 1.098e-25 - 1.0).abs() < 1e-14);
}

#[test]
fn shipped_synthetic_dataset_loads() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/paddle");
    let m: OpticalMode = load_optical_mode(dir.join("M1.toml")).unwrap();
    assert_eq!(m.parity.axes(), [1, 1, 1]);
    assert!(!m.boundary_for("S").unwrap().is_empty());
}
