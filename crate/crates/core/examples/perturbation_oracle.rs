//! Cross terms of the quadratic coupling against the exact curvature of a
//! two-level avoided crossing built from the same overlap.

use std::f64::consts::{PI, TAU};

use omx::coupling::{cross_coupling_rate, g2_cross_term, two_mode_curvature, two_mode_oracle};
use omx::golden::ORACLE_RATIOS;
use omx::synthetic::{MirroredPaddle, SyntheticMode};

fn main() -> omx::Result<()> {
    let paddle = MirroredPaddle::default();
    let contrast = paddle.contrast();
    let mech = paddle.sliding_mode("S", TAU * 5.5e6, 450e-18, 1e3)?;
    let k = PI / paddle.half_length;
    let w = TAU * 191e12;
    let target = paddle.optical_mode(&SyntheticMode::new("M1", w, 1, 0.5 * k), "S")?;

    println!("{:>8} {:>16} {:>16} {:>10}", "w'/w", "cross term", "oracle", "rel dev");
    for (i, r) in ORACLE_RATIOS.iter().enumerate() {
        let partner = paddle.optical_mode(&SyntheticMode::new(&format!("P{i}"), r * w, -1, 0.9 * k), "S")?;
        let analytic = g2_cross_term(&partner, &target, &mech, &contrast)?;
        let c = cross_coupling_rate(&partner, &target, &mech, &contrast)?;
        let exact = two_mode_curvature(target.omega, partner.omega, c)?;
        println!("{r:>8.3} {analytic:>16.6e} {exact:>16.6e} {:>10.2e}", (analytic / exact - 1.0).abs());
    }

    // The tracked branch over a displacement sweep, far past second order.
    let partner = paddle.optical_mode(&SyntheticMode::new("P", 1.05 * w, -1, 0.9 * k), "S")?;
    let c = cross_coupling_rate(&partner, &target, &mech, &contrast)?;
    println!("\nbranch shift for w' = 1.05 w:");
    for x_nm in [0.0, 1.0, 10.0, 100.0] {
        let (a, _) = two_mode_oracle(target.omega, partner.omega, c, x_nm * 1e-9)?;
        println!("  x = {x_nm:>5} nm  shift/2pi = {:+.6e} Hz", (a - target.omega) / TAU);
    }
    Ok(())
}
