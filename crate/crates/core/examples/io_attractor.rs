//! Integer-order attractors of the three example maps, written as CSV and PNG.
//!
//! Usage: cargo run --release --example io_attractor [out_dir]

use std::fs;
use std::path::PathBuf;

use symfrac::plot::{Bounds, Canvas, PALETTE};
use symfrac::{iterate_io, ComplexPoint, MapSpec, DEFAULT_ESCAPE_RADIUS};

const STEPS: usize = 100_000;
const DISCARD: usize = 1000;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&dir)?;
    let z0 = ComplexPoint::new(0.05, 0.1);

    for (name, spec) in [
        ("dihedral", MapSpec::preset_dihedral()),
        ("cyclic", MapSpec::preset_cyclic()),
        ("dihedral_re", MapSpec::preset_dihedral_re()),
    ] {
        let orbit = iterate_io(&spec, z0, STEPS, DEFAULT_ESCAPE_RADIUS)?;
        let kept = orbit.post_transient(DISCARD, 1)?;
        let r_max = kept.iter().map(|p| p.modulus()).fold(0.0, f64::max);
        println!("{name:<12} {} points kept, max |z| = {r_max:.4}", kept.len());

        fs::write(dir.join(format!("io_{name}.csv")), orbit.to_csv_string())?;
        let pts: Vec<(f64, f64)> = kept.iter().map(|p| (p.x, p.y)).collect();
        let mut canvas = Canvas::new(800, 800, Bounds::fit(&pts));
        canvas.scatter(&pts, PALETTE[3]);
        canvas.save_png(dir.join(format!("io_{name}.png")))?;
    }
    println!("wrote CSV and PNG files to {}", dir.display());
    Ok(())
}
