//! A fractional-order orbit of the D3 map next to its integer-order
//! counterpart. The memory term pulls the orbit off the symmetric cloud.
//!
//! Usage: cargo run --release --example fo_attractor [out_dir] [q]

use std::fs;
use std::path::PathBuf;

use symfrac::group::elements;
use symfrac::plot::{Bounds, Canvas, PALETTE};
use symfrac::symmetry::orbit_symmetry_defect;
use symfrac::{iterate_fo, iterate_io, ComplexPoint, MapSpec, DEFAULT_ESCAPE_RADIUS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "out".into()));
    let q: f64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(0.03);
    fs::create_dir_all(&dir)?;

    let spec = MapSpec::preset_dihedral();
    let z0 = ComplexPoint::new(0.05, 0.1);
    let steps = 10_000;
    let discard = 1000;

    let io = iterate_io(&spec, z0, steps, DEFAULT_ESCAPE_RADIUS)?;
    let fo = iterate_fo(&spec, z0, q, steps, DEFAULT_ESCAPE_RADIUS)?;
    if let Some(k) = fo.diverged_at {
        println!("fractional orbit escaped at step {k}");
        return Ok(());
    }

    println!("cloud defect after discarding {discard} steps (q = {q}):");
    println!("{:>4} {:>10} {:>10}", "g", "io", "fo");
    for g in elements(spec.m)? {
        let a = orbit_symmetry_defect(&io, g, discard)?;
        let b = orbit_symmetry_defect(&fo, g, discard)?;
        println!("{:>4} {:>10.4} {:>10.4}", g.label(), a.defect, b.defect);
    }

    let io_pts: Vec<(f64, f64)> = io.post_transient(discard, 1)?.iter().map(|p| (p.x, p.y)).collect();
    let fo_pts: Vec<(f64, f64)> = fo.post_transient(discard, 1)?.iter().map(|p| (p.x, p.y)).collect();
    let mut canvas = Canvas::new(800, 800, Bounds::fit(io_pts.iter().chain(&fo_pts)));
    canvas.scatter(&io_pts, PALETTE[3]);
    canvas.scatter(&fo_pts, PALETTE[0]);
    canvas.save_png(dir.join("fo_vs_io.png"))?;
    fs::write(dir.join("fo_orbit.csv"), fo.to_csv_string())?;
    println!("wrote {}", dir.join("fo_vs_io.png").display());
    Ok(())
}
