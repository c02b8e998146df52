//! Each map family written out as a pair of real polynomials, checked
//! against the complex form at a few points.

use symfrac::{ComplexPoint, MapSpec};

fn main() {
    let maps = [
        ("dihedral D3", MapSpec::preset_dihedral()),
        ("cyclic Z4", MapSpec::preset_cyclic()),
        ("dihedral D6 with Re(z^6)", MapSpec::preset_dihedral_re()),
    ];
    for (name, spec) in maps {
        let form = spec.cartesian();
        println!("{name}: {}", spec.to_config_string().replace('\n', "  "));
        println!("  f1(x, y) = {}", form.f1);
        println!("  f2(x, y) = {}", form.f2);

        let mut worst: f64 = 0.0;
        for &(x, y) in &[(0.1, 0.2), (-0.7, 0.35), (1.1, -0.9)] {
            let (u, v) = form.eval(x, y);
            worst = worst.max(ComplexPoint::new(u, v).dist(spec.eval(ComplexPoint::new(x, y))));
        }
        println!("  largest gap to the complex form: {worst:.2e}\n");
    }

    let (u, v) = MapSpec::preset_dihedral().eval_cartesian(0.1, 0.2);
    println!("dihedral map at (0.1, 0.2): ({u:.6}, {v:.6})");
}
