//! Integer-order iteration `z(n) = f(z(n-1))`.

use crate::error::{invalid, Result};
use crate::group::ComplexPoint;
use crate::maps::MapSpec;
use crate::orbit::{escaped, Orbit, Order};

/// Iterates `spec` for `steps` steps from `z0`, stopping early once
/// `|z| > escape_radius`. Divergence is reported in [`Orbit::diverged_at`].
pub fn iterate_io(spec: &MapSpec, z0: ComplexPoint, steps: usize, escape_radius: f64) -> Result<Orbit> {
    if steps < 1 {
        return invalid("steps must be at least 1");
    }
    if !(escape_radius > 0.0) {
        return invalid("escape radius must be positive");
    }
    let mut points = Vec::with_capacity(steps + 1);
    points.push(z0);
    let mut diverged_at = escaped(z0, escape_radius).then_some(0);
    let mut z = z0;
    if diverged_at.is_none() {
        for n in 1..=steps {
            z = spec.eval(z);
            points.push(z);
            if escaped(z, escape_radius) {
                diverged_at = Some(n);
                break;
            }
        }
    }
    Ok(Orbit { points, map: *spec, order: Order::Integer, diverged_at, discard: 0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::DEFAULT_ESCAPE_RADIUS;
    use proptest::prelude::*;

    #[test]
    fn origin_stays_put() {
        let orbit = iterate_io(&MapSpec::preset_dihedral(), ComplexPoint::ORIGIN, 100, DEFAULT_ESCAPE_RADIUS).unwrap();
        assert_eq!(orbit.len(), 101);
        assert!(orbit.points.iter().all(|&p| p == ComplexPoint::ORIGIN));
        assert_eq!(orbit.diverged_at, None);
    }

    #[test]
    fn linear_contraction() {
        let spec = MapSpec::dihedral(2, 0.5, 0.0, 0.0).unwrap();
        let orbit = iterate_io(&spec, ComplexPoint::new(1.0, 0.0), 3, DEFAULT_ESCAPE_RADIUS).unwrap();
        let xs: Vec<f64> = orbit.points.iter().map(|p| p.x).collect();
        assert_eq!(xs, vec![1.0, 0.5, 0.25, 0.125]);
        assert!(orbit.points.iter().all(|p| p.y == 0.0));
    }

    #[test]
    fn preset_orbit_is_bounded() {
        let orbit = iterate_io(&MapSpec::preset_dihedral(), ComplexPoint::new(0.05, 0.1), 100_000, 1e6).unwrap();
        assert!(!orbit.is_diverged());
        assert!(orbit.points.iter().all(|p| p.modulus() < 3.0));
    }

    #[test]
    fn divergence_is_data() {
        let spec = MapSpec::dihedral(2, 3.0, 0.0, 0.0).unwrap();
        let orbit = iterate_io(&spec, ComplexPoint::new(1.0, 0.0), 100, 1e3).unwrap();
        // 3^7 = 2187 is the first power above 1000
        assert_eq!(orbit.diverged_at, Some(7));
        assert_eq!(orbit.len(), 8);
        assert!(orbit.bounded_points().iter().all(|p| p.modulus() <= 1e3));
    }

    #[test]
    fn rejects_bad_arguments() {
        let spec = MapSpec::preset_dihedral();
        assert!(iterate_io(&spec, ComplexPoint::ORIGIN, 0, 1.0).is_err());
        assert!(iterate_io(&spec, ComplexPoint::ORIGIN, 10, 0.0).is_err());
        assert!(iterate_io(&spec, ComplexPoint::ORIGIN, 10, f64::NAN).is_err());
    }

    #[test]
    fn csv_layout() {
        let spec = MapSpec::dihedral(2, 0.5, 0.0, 0.0).unwrap();
        let orbit = iterate_io(&spec, ComplexPoint::new(1.0, 0.0), 2, 10.0).unwrap();
        assert_eq!(orbit.to_csv_string(), "n,x,y\n0,1,0\n1,0.5,0\n2,0.25,0\n");
        let back = crate::orbit::read_orbit_csv(&orbit.to_csv_string()).unwrap();
        assert_eq!(back, orbit.points);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn deterministic(x in -1.0..1.0f64, y in -1.0..1.0f64) {
            let spec = MapSpec::preset_cyclic();
            let a = iterate_io(&spec, ComplexPoint::new(x, y), 500, 1e6).unwrap();
            let b = iterate_io(&spec, ComplexPoint::new(x, y), 500, 1e6).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn escape_index_monotone_in_radius(x in -2.0..2.0f64, y in -2.0..2.0f64, r in 1.0..100.0f64) {
            let spec = MapSpec::preset_dihedral();
            let z0 = ComplexPoint::new(x, y);
            let near = iterate_io(&spec, z0, 200, r).unwrap();
            let far = iterate_io(&spec, z0, 200, r * 10.0).unwrap();
            if let Some(k) = near.diverged_at {
                prop_assert!(far.diverged_at.map_or(true, |k2| k2 >= k));
            }
        }
    }
}
