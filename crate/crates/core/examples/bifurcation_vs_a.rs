//! Integer-order bifurcation diagram of the D3 map against the parameter a,
//! one branch per initial condition, and the branches compared at a = -1.755.
//!
//! Usage: cargo run --release --example bifurcation_vs_a [out_dir]

use std::fs;
use std::path::PathBuf;

use symfrac::bifurcation::{
    group_slices, poincare_section, run_scan, write_scan_csv, ScanConfig, SliceScale, IO_INITIAL_CONDITIONS,
};
use symfrac::plot::{Bounds, Canvas, PALETTE};
use symfrac::MapSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&dir)?;

    let cfg = ScanConfig::io_param_a(MapSpec::preset_dihedral(), -2.0, -0.5, 1500, IO_INITIAL_CONDITIONS.to_vec());
    let sets = run_scan(&cfg)?;
    for s in &sets {
        println!("ic {}: {} samples, {} diverged cells", s.ic_index, s.sample_count(), s.diverged.len());
    }

    let a = -1.755;
    let section = poincare_section(&sets, a)?;
    let slices: Vec<&[f64]> = section.iter().map(|(_, xs)| xs.as_slice()).collect();
    println!("\nat a = {a}:");
    println!("  groups at sampling resolution: {:?}", group_slices(&slices, SliceScale::Resolution, 1.0));
    println!("  groups at plot resolution:     {:?}", group_slices(&slices, SliceScale::Range, 0.1));

    write_scan_csv(fs::File::create(dir.join("bifurcation_a.csv"))?, &sets)?;
    let series: Vec<Vec<(f64, f64)>> = sets
        .iter()
        .map(|s| s.axis_values.iter().zip(&s.samples).flat_map(|(&v, xs)| xs.iter().map(move |&x| (v, x))).collect())
        .collect();
    let mut canvas = Canvas::new(1200, 700, Bounds::fit(series.iter().flatten()));
    for (i, pts) in series.iter().enumerate() {
        canvas.scatter(pts, PALETTE[i % PALETTE.len()]);
    }
    canvas.save_png(dir.join("bifurcation_a.png"))?;
    println!("wrote {}", dir.join("bifurcation_a.png").display());
    Ok(())
}
