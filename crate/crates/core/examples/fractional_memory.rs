//! The Caputo kernel, the cost of full memory and the effect of truncating it.

use std::time::Instant;

use symfrac::caputo::{iterate_fo_real, iterate_fo_with, weights, FoSettings};
use symfrac::{ComplexPoint, MapSpec, DEFAULT_ESCAPE_RADIUS};

fn main() -> symfrac::Result<()> {
    for q in [0.03, 0.5, 0.97] {
        let w = weights(q, 1000)?;
        let s = w.as_slice();
        println!("q = {q}: w[1] = {:.4}  w[10] = {:.4}  w[999] = {:.3e}", s[1], s[10], s[999]);
    }

    // fractional logistic map u(n) = u0 + sum w[n-k] * r u (1 - u)
    let u = iterate_fo_real(|u| 2.5 * u * (1.0 - u) - u, 0.3, 0.8, 200)?;
    println!("\nscalar orbit tail: {:?}", &u[195..].iter().map(|v| format!("{v:.5}")).collect::<Vec<_>>());

    let spec = MapSpec::preset_dihedral();
    let z0 = ComplexPoint::new(0.05, 0.1);
    for n in [2000, 4000, 8000] {
        let t = Instant::now();
        iterate_fo_with(&spec, z0, 0.03, n, &FoSettings::default())?;
        println!("{n:>5} steps with full memory: {:?}", t.elapsed());
    }

    let full = iterate_fo_with(&spec, z0, 0.03, 2000, &FoSettings::default())?;
    for memory in [50, 500, 2000] {
        let cut = iterate_fo_with(&spec, z0, 0.03, 2000, &FoSettings { escape_radius: DEFAULT_ESCAPE_RADIUS, memory: Some(memory) })?;
        let first_gap = full.points.iter().zip(&cut.points).position(|(a, b)| a.dist(*b) > 1e-6);
        println!("memory {memory:>4}: first step off the full solution: {first_gap:?}");
    }
    Ok(())
}
