//! The dihedral group `D_m` and its cyclic subgroup `C_m` acting on points of
//! the complex plane.
//!
//! Elements are stored as `(m, k, reflect)`: `R_k` is the rotation by
//! `2πk/m`, and `S_k = R_k · S_0` where `S_0` is complex conjugation. Every
//! element is applied through its 2×2 matrix built from `cos`/`sin` of
//! `2πk/m`, so the rounding error of `R_k` does not grow with `k`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// A point `z = x + iy` of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub const ORIGIN: ComplexPoint = ComplexPoint { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(r * c, r * s)
    }

    pub fn modulus(self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Argument in `(-π, π]`, with the origin mapped to `0`.
    pub fn argument(self) -> f64 {
        if self.x == 0.0 && self.y == 0.0 {
            0.0
        } else {
            self.y.atan2(self.x)
        }
    }

    pub fn to_polar(self) -> (f64, f64) {
        (self.modulus(), self.argument())
    }

    pub fn conj(self) -> Self {
        Self::new(self.x, -self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(self, other: ComplexPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl From<Complex64> for ComplexPoint {
    fn from(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        Complex64::new(p.x, p.y)
    }
}

impl From<(f64, f64)> for ComplexPoint {
    fn from((x, y): (f64, f64)) -> Self {
        Self::new(x, y)
    }
}

/// Polar form `(r, θ)` of `z`; see [`ComplexPoint::argument`] for the angle
/// convention.
pub fn to_polar(z: ComplexPoint) -> (f64, f64) {
    z.to_polar()
}

/// One of the `2m` elements of `D_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    m: u32,
    k: u32,
    reflect: bool,
}

impl GroupElement {
    pub fn new(m: u32, k: u32, reflect: bool) -> Result<Self> {
        if m < 1 {
            return invalid("group order m must be at least 1");
        }
        if k >= m {
            return invalid(format!("element index k={k} out of range for m={m}"));
        }
        Ok(Self { m, k, reflect })
    }

    pub fn rotation(m: u32, k: u32) -> Result<Self> {
        Self::new(m, k, false)
    }

    pub fn reflection(m: u32, k: u32) -> Result<Self> {
        Self::new(m, k, true)
    }

    pub fn identity(m: u32) -> Result<Self> {
        Self::new(m, 0, false)
    }

    pub fn m(self) -> u32 {
        self.m
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn is_reflection(self) -> bool {
        self.reflect
    }

    pub fn is_identity(self) -> bool {
        self.k == 0 && !self.reflect
    }

    /// Rotation angle `2πk/m` of the rotational part.
    pub fn angle(self) -> f64 {
        2.0 * PI * f64::from(self.k) / f64::from(self.m)
    }

    /// Row-major 2×2 matrix `[[a, b], [c, d]]` acting on `(x, y)`.
    pub fn matrix(self) -> [[f64; 2]; 2] {
        let (s, c) = if self.k == 0 {
            (0.0, 1.0)
        } else {
            self.angle().sin_cos()
        };
        if self.reflect {
            // R_k · diag(1, -1)
            [[c, s], [s, -c]]
        } else {
            [[c, -s], [s, c]]
        }
    }

    pub fn apply(self, z: ComplexPoint) -> ComplexPoint {
        if self.k == 0 {
            return if self.reflect { z.conj() } else { z };
        }
        let [[a, b], [c, d]] = self.matrix();
        ComplexPoint::new(a * z.x + b * z.y, c * z.x + d * z.y)
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(self, other: GroupElement) -> Result<GroupElement> {
        if self.m != other.m {
            return invalid("cannot compose elements of different groups");
        }
        let m = self.m;
        // R_a S^s ∘ R_b S^t = R_{a ± b} S^{s xor t}, with the sign flipped when s is a reflection.
        let k = if self.reflect {
            (self.k + m - other.k) % m
        } else {
            (self.k + other.k) % m
        };
        Ok(GroupElement { m, k, reflect: self.reflect ^ other.reflect })
    }

    pub fn label(self) -> String {
        format!("{}{}", if self.reflect { 'S' } else { 'R' }, self.k)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parses `R<k>` / `S<k>` labels. The group order is supplied separately.
pub fn parse_element(label: &str, m: u32) -> Result<GroupElement> {
    let label = label.trim();
    let mut chars = label.chars();
    let reflect = match chars.next() {
        Some('R' | 'r') => false,
        Some('S' | 's') => true,
        _ => return invalid(format!("group element `{label}` must look like R<k> or S<k>")),
    };
    let k = u32::from_str(chars.as_str())
        .map_err(|_| Error::InvalidArgument(format!("bad element index in `{label}`")))?;
    GroupElement::new(m, k, reflect)
}

/// All `2m` elements of `D_m`: rotations `R_0..R_{m-1}` then reflections `S_0..S_{m-1}`.
pub fn elements(m: u32) -> Result<Vec<GroupElement>> {
    if m < 1 {
        return invalid("group order m must be at least 1");
    }
    let rotations = (0..m).map(|k| GroupElement { m, k, reflect: false });
    let reflections = (0..m).map(|k| GroupElement { m, k, reflect: true });
    Ok(rotations.chain(reflections).collect())
}

/// The `m` rotations forming `C_m`.
pub fn cyclic_elements(m: u32) -> Result<Vec<GroupElement>> {
    Ok(elements(m)?.into_iter().filter(|g| !g.reflect).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: ComplexPoint, b: ComplexPoint, tol: f64) -> bool {
        (a.x - b.x).abs() <= tol && (a.y - b.y).abs() <= tol
    }

    #[test]
    fn rotation_of_triangle_vertex() {
        let r1 = GroupElement::rotation(3, 1).unwrap();
        let b = r1.apply(ComplexPoint::new(0.8703, 0.0));
        assert!((b.x - (-0.4351)).abs() < 5e-5, "{b:?}");
        assert!((b.y - 0.7537).abs() < 5e-5, "{b:?}");
    }

    #[test]
    fn conjugation_of_cyclic_point() {
        let s0 = GroupElement::reflection(4, 0).unwrap();
        let b = s0.apply(ComplexPoint::new(-0.085522, -0.9266));
        assert_eq!(b, ComplexPoint::new(-0.085522, 0.9266));
    }

    #[test]
    fn identity_is_exact() {
        for m in 1..10 {
            let z = ComplexPoint::new(0.123456789, -9.87654321);
            assert_eq!(GroupElement::identity(m).unwrap().apply(z), z);
        }
    }

    #[test]
    fn element_counts_and_order() {
        assert_eq!(elements(3).unwrap().len(), 6);
        assert_eq!(elements(4).unwrap().len(), 8);
        let d1 = elements(1).unwrap();
        assert_eq!(d1, vec![GroupElement::identity(1).unwrap(), GroupElement::reflection(1, 0).unwrap()]);
        let d5 = elements(5).unwrap();
        assert!(d5[..5].iter().enumerate().all(|(i, g)| !g.is_reflection() && g.k() == i as u32));
        assert!(d5[5..].iter().all(|g| g.is_reflection()));
        assert!(elements(0).is_err());
    }

    #[test]
    fn bad_index_rejected() {
        assert!(GroupElement::new(3, 3, false).is_err());
        assert!(GroupElement::new(0, 0, false).is_err());
        assert!(parse_element("Q1", 3).is_err());
        assert_eq!(parse_element("S2", 3).unwrap(), GroupElement::reflection(3, 2).unwrap());
    }

    #[test]
    fn polar_conventions() {
        assert_eq!(to_polar(ComplexPoint::new(1.0, 0.0)), (1.0, 0.0));
        let (r, t) = to_polar(ComplexPoint::new(0.0, 1.0));
        assert_eq!(r, 1.0);
        assert!((t - PI / 2.0).abs() < 1e-15);
        let (r, t) = to_polar(ComplexPoint::new(-1.0, -1.0));
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
        assert!((t + 3.0 * PI / 4.0).abs() < 1e-15);
        assert_eq!(to_polar(ComplexPoint::ORIGIN), (0.0, 0.0));
        // negative real axis sits on the closed end of (-π, π]
        assert_eq!(to_polar(ComplexPoint::new(-2.0, 0.0)).1, PI);
    }

    fn point() -> impl Strategy<Value = ComplexPoint> {
        (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(x, y)| ComplexPoint::new(x, y))
    }

    proptest! {
        #[test]
        fn polar_round_trip(z in point()) {
            let (r, t) = z.to_polar();
            prop_assert!(close(ComplexPoint::from_polar(r, t), z, 1e-12));
        }

        #[test]
        fn rotation_m_times_is_identity(z in point(), m in 2u32..=12) {
            let r1 = GroupElement::rotation(m, 1).unwrap();
            let w = (0..m).fold(z, |acc, _| r1.apply(acc));
            prop_assert!(close(w, z, 1e-12));
        }

        #[test]
        fn reflections_are_involutions(z in point(), m in 1u32..=12, k in 0u32..12) {
            let s = GroupElement::reflection(m, k % m).unwrap();
            prop_assert!(close(s.apply(s.apply(z)), z, 1e-12));
        }

        #[test]
        fn matrix_matches_polar_rotation(z in point(), m in 1u32..=12, k in 0u32..12) {
            let g = GroupElement::rotation(m, k % m).unwrap();
            let (r, t) = z.to_polar();
            let polar = ComplexPoint::from_polar(r, t + g.angle());
            prop_assert!(close(g.apply(z), polar, 1e-12));
        }

        #[test]
        fn reflection_is_rotated_conjugate(z in point(), m in 1u32..=12, k in 0u32..12) {
            let k = k % m;
            let s = GroupElement::reflection(m, k).unwrap();
            let r = GroupElement::rotation(m, k).unwrap();
            prop_assert!(close(s.apply(z), r.apply(z.conj()), 1e-12));
        }
    }

    #[test]
    fn composition_table_matches_pointwise_action() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for m in 1..=8 {
            let els = elements(m).unwrap();
            for _ in 0..4 {
                let z = ComplexPoint::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                for &g in &els {
                    for &h in &els {
                        let gh = g.compose(h).unwrap();
                        assert!(close(gh.apply(z), g.apply(h.apply(z)), 1e-12), "m={m} {g}∘{h}");
                    }
                }
            }
        }
    }
}
