//! Scan over the initial x0 with a random y0 per cell. The surviving orbits
//! fall into a small number of coexisting attractors.

use symfrac::bifurcation::{group_slices, run_scan, ScanConfig, SliceScale};
use symfrac::MapSpec;

fn main() -> symfrac::Result<()> {
    let mut cfg = ScanConfig::init_x0(MapSpec::preset_dihedral().with_a(-1.755), -1.5, 1.5, 200, 0.0, None);
    cfg.randomize_y0 = true;
    cfg.seed = 42;
    let set = run_scan(&cfg)?.remove(0);

    let slices: Vec<&[f64]> = set.samples.iter().map(Vec::as_slice).collect();
    let groups = group_slices(&slices, SliceScale::Resolution, 1.0);
    println!("{} cells, {} diverged, {} attractors", slices.len(), set.diverged.len(), groups.len());
    for (i, g) in groups.iter().enumerate() {
        let first = g[0];
        let z0 = set.initial_values[first];
        println!("  attractor {i}: {} cells, e.g. z0 = ({:+.4}, {:+.4})", g.len(), z0.x, z0.y);
    }
    Ok(())
}
