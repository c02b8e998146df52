//! Fractional-order bifurcation diagram against the order q. Different
//! initial conditions settle on visibly different branches.
//!
//! Usage: cargo run --release --example bifurcation_vs_q [out_dir]

use std::fs;
use std::path::PathBuf;

use symfrac::bifurcation::{
    distinctness, pairwise_distinct, poincare_section, run_scan, slice_spread, ScanConfig, FO_INITIAL_CONDITIONS,
};
use symfrac::plot::{Bounds, Canvas, PALETTE};
use symfrac::MapSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&dir)?;

    let mut cfg = ScanConfig::fo_order_q(MapSpec::preset_dihedral(), 0.01, 0.99, 200, FO_INITIAL_CONDITIONS.to_vec());
    cfg.steps = 1500;
    cfg.discard = 1300;
    let sets = run_scan(&cfg)?;

    let q = 0.057;
    let d = distinctness(&sets, q)?;
    let section = poincare_section(&sets, q)?;
    let slices: Vec<&[f64]> = section.iter().map(|(_, xs)| xs.as_slice()).collect();
    println!("slice distances near q = {q}:");
    for row in &d {
        println!("  {}", row.iter().map(|v| format!("{v:7.4}")).collect::<Vec<_>>().join(" "));
    }
    let spreads: Vec<String> = slices.iter().map(|s| format!("{:.1e}", slice_spread(s))).collect();
    println!("resolutions: {}", spreads.join(" "));
    println!("pairwise distinct: {}", pairwise_distinct(&slices, 1.0));

    let series: Vec<Vec<(f64, f64)>> = sets
        .iter()
        .map(|s| s.axis_values.iter().zip(&s.samples).flat_map(|(&v, xs)| xs.iter().map(move |&x| (v, x))).collect())
        .collect();
    let mut canvas = Canvas::new(1200, 700, Bounds::fit(series.iter().flatten()));
    for (i, pts) in series.iter().enumerate() {
        canvas.scatter(pts, PALETTE[i % PALETTE.len()]);
    }
    canvas.save_png(dir.join("bifurcation_q.png"))?;
    println!("wrote {}", dir.join("bifurcation_q.png").display());
    Ok(())
}
