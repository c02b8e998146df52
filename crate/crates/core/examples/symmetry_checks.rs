//! Which group elements each map commutes with, and what happens to
//! symmetry along orbits of both orders.

use symfrac::group::{elements, parse_element};
use symfrac::symmetry::{check_all_elements, expected_equivariant, fo_solution_defect, fo_transported_defect};
use symfrac::{ComplexPoint, MapSpec};

fn main() -> symfrac::Result<()> {
    for spec in [MapSpec::preset_dihedral(), MapSpec::preset_cyclic(), MapSpec::preset_dihedral_re()] {
        println!("{} (m = {})", spec.kind, spec.m);
        for r in check_all_elements(&spec, 1000, 1.5, 7)? {
            let g = r.group_element;
            let verdict = if expected_equivariant(spec.kind, g) { "commutes" } else { "broken" };
            println!("  {:>3}  max |f(gz) - g f(z)| = {:.3e}  ({verdict})", g.label(), r.max_defect);
        }
    }

    // Fractional orbits start from a fixed point z0, so even an equivariant
    // map produces solutions that are not mapped onto each other.
    let spec = MapSpec::preset_dihedral();
    let q = 0.03;
    let z0 = ComplexPoint::new(0.05, 0.1);
    println!("\nfractional solution with q = {q}, z0 = ({}, {}):", z0.x, z0.y);
    for g in elements(spec.m)? {
        let r = fo_solution_defect(&spec, z0, q, g, 200)?;
        println!("  {:>3}  defect {:.4}  |gz0 - z0| = {:.4}", g.label(), r.max_defect(), g.apply(z0).dist(z0));
    }

    let on_axis = ComplexPoint::new(0.3, 0.0);
    let s0 = parse_element("S0", spec.m)?;
    let r = fo_solution_defect(&spec, on_axis, q, s0, 200)?;
    println!("  S0 with z0 on its mirror line: defect {:.2e}", r.max_defect());

    let r1 = parse_element("R1", spec.m)?;
    let moved = fo_transported_defect(&spec, z0, q, r1, 50)?;
    let worst = moved.iter().copied().fold(0.0, f64::max);
    println!("  R1 with the initial value rotated as well: {worst:.2e} over 50 steps");
    Ok(())
}
