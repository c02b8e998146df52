//! The dihedral group D_m acting on the plane: element labels, matrices,
//! the composition table and the orbit of a single point.

use symfrac::group::{elements, parse_element};
use symfrac::ComplexPoint;

fn main() -> symfrac::Result<()> {
    let m = 3;
    let group = elements(m)?;

    println!("D{m} has {} elements", group.len());
    for g in &group {
        let [[a, b], [c, d]] = g.matrix();
        println!("{:>3}  [{a:+.4} {b:+.4}; {c:+.4} {d:+.4}]", g.label());
    }

    print!("\n  *  ");
    for h in &group {
        print!("{:>4}", h.label());
    }
    println!();
    for g in &group {
        print!("{:>4} ", g.label());
        for h in &group {
            print!("{:>4}", g.compose(*h)?.label());
        }
        println!();
    }

    let p = ComplexPoint::new(0.8703, 0.0);
    println!("\nimages of ({}, {}):", p.x, p.y);
    for g in &group {
        let q = g.apply(p);
        let (r, theta) = q.to_polar();
        println!("{:>3}  ({:+.5}, {:+.5})  r = {r:.4}  theta = {:+.4}", g.label(), q.x, q.y, theta);
    }

    let s1 = parse_element("S1", m)?;
    println!("\nS1 twice is {}", s1.compose(s1)?.label());
    Ok(())
}
