//! Numerical checks of map equivariance and attractor symmetry.
//!
//! Three kinds of evidence:
//!
//! * pointwise equivariance `f(σz) = σf(z)` of the map itself
//!   ([`check_equivariance`]);
//! * symmetry of a computed attractor as a point cloud
//!   ([`orbit_symmetry_defect`], [`point_membership_test`]);
//! * equivariance of the fractional solution operator
//!   `z ↦ z(0) + Σ w[n-k] f(z(k-1))` with the initial value held fixed
//!   ([`fo_solution_defect`]). Because the same `z(0)` enters both sides,
//!   the defect is `|z(0) − σz(0)|` up to rounding: zero only when `σ`
//!   fixes the initial value, e.g. `S_0` with `y(0) = 0`.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::caputo::{iterate_fo, memory_sum, weights};
use crate::error::{invalid, Result};
use crate::group::{elements, ComplexPoint, GroupElement};
use crate::maps::{MapKind, MapSpec};
use crate::nn::GridIndex;
use crate::orbit::{Orbit, DEFAULT_ESCAPE_RADIUS};

/// Post-transient points an orbit must keep for cloud comparisons.
pub const MIN_CLOUD_POINTS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EquivarianceReport {
    pub group_element: GroupElement,
    pub max_defect: f64,
    pub sample_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrbitSymmetryReport {
    pub group_element: GroupElement,
    pub defect: f64,
    pub points_used: usize,
}

/// Termwise comparison of `z(0) + F_n(σ z)` against `σ(z(0) + F_n(z))`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FoSolutionReport {
    pub group_element: GroupElement,
    /// `defects[n-1]` is the defect at step `n`.
    pub defects: Vec<f64>,
}

impl FoSolutionReport {
    pub fn max_defect(&self) -> f64 {
        self.defects.iter().copied().fold(0.0, f64::max)
    }

    /// Largest defect over steps `1..=n`.
    pub fn max_defect_until(&self, n: usize) -> f64 {
        self.defects.iter().take(n).copied().fold(0.0, f64::max)
    }
}

/// Uniform sample from the disk `|z| <= radius`.
pub fn sample_disk<R: Rng>(rng: &mut R, radius: f64) -> ComplexPoint {
    let r = radius * rng.gen::<f64>().sqrt();
    let t = rng.gen_range(0.0..std::f64::consts::TAU);
    ComplexPoint::from_polar(r, t)
}

pub fn check_equivariance(
    spec: &MapSpec,
    g: GroupElement,
    samples: usize,
    radius: f64,
    seed: u64,
) -> Result<EquivarianceReport> {
    if samples < 1 {
        return invalid("samples must be at least 1");
    }
    if g.m() != spec.m {
        return invalid(format!("element {g} belongs to D_{}, map has m = {}", g.m(), spec.m));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_defect = 0.0f64;
    for _ in 0..samples {
        let z = sample_disk(&mut rng, radius);
        let lhs = spec.eval(g.apply(z));
        let rhs = g.apply(spec.eval(z));
        max_defect = max_defect.max(lhs.dist(rhs));
    }
    Ok(EquivarianceReport { group_element: g, max_defect, sample_count: samples })
}

/// [`check_equivariance`] over all `2m` elements of `D_m`, same samples for each.
pub fn check_all_elements(spec: &MapSpec, samples: usize, radius: f64, seed: u64) -> Result<Vec<EquivarianceReport>> {
    elements(spec.m)?.into_par_iter().map(|g| check_equivariance(spec, g, samples, radius, seed)).collect()
}

/// Whether maps of `kind` commute with `g`: every element for the dihedral
/// kinds, rotations only for cyclic maps.
pub fn expected_equivariant(kind: MapKind, g: GroupElement) -> bool {
    kind.has_reflection_symmetry() || !g.is_reflection()
}

fn cloud(orbit: &Orbit, discard: usize) -> Result<&[ComplexPoint]> {
    orbit.post_transient(discard, MIN_CLOUD_POINTS)
}

/// Mean distance from each transformed post-transient point to the nearest
/// untransformed post-transient point.
pub fn orbit_symmetry_defect(orbit: &Orbit, g: GroupElement, discard: usize) -> Result<OrbitSymmetryReport> {
    let pts = cloud(orbit, discard)?;
    if g.is_identity() {
        return Ok(OrbitSymmetryReport { group_element: g, defect: 0.0, points_used: pts.len() });
    }
    let index = GridIndex::new(pts);
    let dists: Vec<f64> = pts.par_iter().map(|&p| index.nearest_distance(g.apply(p))).collect();
    let total: f64 = dists.iter().sum();
    Ok(OrbitSymmetryReport { group_element: g, defect: total / pts.len() as f64, points_used: pts.len() })
}

/// True iff some post-transient point of `orbit` lies within `tol` of `p`.
pub fn point_membership_test(orbit: &Orbit, p: ComplexPoint, discard: usize, tol: f64) -> Result<bool> {
    let pts = cloud(orbit, discard)?;
    Ok(pts.iter().any(|q| q.dist(p) <= tol))
}

/// Runs the fractional orbit from `z0` and compares, for each step `n`,
/// the solution operator applied to the transformed history against the
/// transformed solution.
pub fn fo_solution_defect(
    spec: &MapSpec,
    z0: ComplexPoint,
    q: f64,
    g: GroupElement,
    steps: usize,
) -> Result<FoSolutionReport> {
    let orbit = iterate_fo(spec, z0, q, steps, DEFAULT_ESCAPE_RADIUS)?;
    let pts = orbit.bounded_points();
    let kernel = weights(q, steps)?;
    let w = kernel.as_slice();
    let mut hx = Vec::with_capacity(steps);
    let mut hy = Vec::with_capacity(steps);
    let mut defects = Vec::with_capacity(steps);
    for n in 1..pts.len() {
        let f = spec.eval(g.apply(pts[n - 1]));
        hx.push(f.x);
        hy.push(f.y);
        let transported_history = ComplexPoint::new(z0.x + memory_sum(w, &hx, None), z0.y + memory_sum(w, &hy, None));
        defects.push(transported_history.dist(g.apply(pts[n])));
    }
    Ok(FoSolutionReport { group_element: g, defects })
}

/// Termwise distance between the fractional orbit started at `σ(z0)` and the
/// image under `σ` of the orbit started at `z0`. The solution operator
/// commutes with `σ` when the initial value is transported too, so for an
/// equivariant map this stays at rounding level until chaotic amplification
/// takes over; it is a diagnostic, not a symmetry test.
pub fn fo_transported_defect(
    spec: &MapSpec,
    z0: ComplexPoint,
    q: f64,
    g: GroupElement,
    steps: usize,
) -> Result<Vec<f64>> {
    let base = iterate_fo(spec, z0, q, steps, DEFAULT_ESCAPE_RADIUS)?;
    let moved = iterate_fo(spec, g.apply(z0), q, steps, DEFAULT_ESCAPE_RADIUS)?;
    let n = base.bounded_points().len().min(moved.bounded_points().len());
    Ok((1..n).map(|i| moved.points[i].dist(g.apply(base.points[i]))).collect())
}

/// One line of a symmetry report table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub element: String,
    pub kind: String,
    pub defect: f64,
    pub samples: usize,
}

impl From<&EquivarianceReport> for ReportRow {
    fn from(r: &EquivarianceReport) -> Self {
        Self { element: r.group_element.label(), kind: "equivariance".into(), defect: r.max_defect, samples: r.sample_count }
    }
}

impl From<&OrbitSymmetryReport> for ReportRow {
    fn from(r: &OrbitSymmetryReport) -> Self {
        Self { element: r.group_element.label(), kind: "orbit".into(), defect: r.defect, samples: r.points_used }
    }
}

impl From<&FoSolutionReport> for ReportRow {
    fn from(r: &FoSolutionReport) -> Self {
        Self { element: r.group_element.label(), kind: "fo-solution".into(), defect: r.max_defect(), samples: r.defects.len() }
    }
}

/// Writes `element,kind,defect,samples` rows.
pub fn write_report_csv<W: Write>(mut w: W, rows: &[ReportRow]) -> io::Result<()> {
    writeln!(w, "element,kind,defect,samples")?;
    for r in rows {
        writeln!(w, "{},{},{},{}", r.element, r.kind, r.defect, r.samples)?;
    }
    Ok(())
}
