//! Bifurcation diagrams as unions of bifurcative sets.
//!
//! A scan runs one orbit per `(axis value, initial condition)` cell and keeps
//! the post-transient `x` values. The branch traced by a single initial
//! condition across the axis is a [`BifurcativeSet`]. Cells are independent,
//! so they are computed in parallel and placed by cell index.

use std::io::{self, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caputo::iterate_fo;
use crate::error::{invalid, Result};
use crate::group::ComplexPoint;
use crate::iterate::iterate_io;
use crate::maps::MapSpec;
use crate::orbit::DEFAULT_ESCAPE_RADIUS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanAxis {
    /// Map coefficient `a`.
    ParamA,
    /// Fractional order `q`.
    OrderQ,
    /// Real part of the initial condition.
    InitX0,
}

/// Initial conditions used for the dihedral diagrams versus `a`.
pub const IO_INITIAL_CONDITIONS: [ComplexPoint; 5] = [
    ComplexPoint::new(0.05, 0.1),
    ComplexPoint::new(0.01, 0.01),
    ComplexPoint::new(0.001, 0.9667),
    ComplexPoint::new(-0.477, -0.4965),
    ComplexPoint::new(0.5, 0.0001),
];

/// Initial conditions used for the fractional diagrams versus `q`.
pub const FO_INITIAL_CONDITIONS: [ComplexPoint; 5] = [
    ComplexPoint::new(0.001, 0.9667),
    ComplexPoint::new(-0.477, -0.4965),
    ComplexPoint::new(0.5, 0.0001),
    ComplexPoint::new(-0.1, -0.1),
    ComplexPoint::new(0.00001, 0.1),
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub spec_template: MapSpec,
    pub scan_axis: ScanAxis,
    pub axis_min: f64,
    pub axis_max: f64,
    pub axis_steps: usize,
    pub initial_conditions: Vec<ComplexPoint>,
    /// Fractional order for `ParamA` / `InitX0` scans; `None` means integer order.
    pub q_fixed: Option<f64>,
    pub steps: usize,
    pub discard: usize,
    /// Draw a fresh `y0` per cell (only for `InitX0` scans).
    pub randomize_y0: bool,
    pub y0_range: (f64, f64),
    pub seed: u64,
    pub escape_radius: f64,
}

impl ScanConfig {
    /// Integer-order scan over `a` with 2000 transient steps and 200 kept.
    pub fn io_param_a(spec: MapSpec, a_min: f64, a_max: f64, axis_steps: usize, ics: Vec<ComplexPoint>) -> Self {
        Self {
            spec_template: spec,
            scan_axis: ScanAxis::ParamA,
            axis_min: a_min,
            axis_max: a_max,
            axis_steps,
            initial_conditions: ics,
            q_fixed: None,
            steps: 2200,
            discard: 2000,
            randomize_y0: false,
            y0_range: (-1.0, 1.0),
            seed: 0,
            escape_radius: DEFAULT_ESCAPE_RADIUS,
        }
    }

    /// Fractional scan over `q` with 500 transient steps and 200 kept.
    pub fn fo_order_q(spec: MapSpec, q_min: f64, q_max: f64, axis_steps: usize, ics: Vec<ComplexPoint>) -> Self {
        Self {
            scan_axis: ScanAxis::OrderQ,
            axis_min: q_min,
            axis_max: q_max,
            steps: 700,
            discard: 500,
            ..Self::io_param_a(spec, q_min, q_max, axis_steps, ics)
        }
    }

    /// Scan over `x0`; integer order unless `q_fixed` is given.
    pub fn init_x0(spec: MapSpec, x_min: f64, x_max: f64, axis_steps: usize, y0: f64, q_fixed: Option<f64>) -> Self {
        let (steps, discard) = if q_fixed.is_some() { (700, 500) } else { (2200, 2000) };
        Self {
            scan_axis: ScanAxis::InitX0,
            q_fixed,
            steps,
            discard,
            ..Self::io_param_a(spec, x_min, x_max, axis_steps, vec![ComplexPoint::new(0.0, y0)])
        }
    }

    pub fn kept(&self) -> usize {
        self.steps - self.discard
    }

    pub fn validate(&self) -> Result<()> {
        self.spec_template.validate()?;
        if !(self.axis_min < self.axis_max) {
            return invalid("axis_min must be below axis_max");
        }
        if self.axis_steps < 2 {
            return invalid("axis_steps must be at least 2");
        }
        if self.steps < 1 || self.discard >= self.steps {
            return invalid("need steps >= 1 and discard < steps");
        }
        if self.initial_conditions.is_empty() {
            return invalid("at least one initial condition is required");
        }
        if self.initial_conditions.iter().any(|z| !z.is_finite()) {
            return invalid("initial conditions must be finite");
        }
        if self.randomize_y0 && self.scan_axis != ScanAxis::InitX0 {
            return invalid("randomize_y0 only applies to x0 scans");
        }
        if self.randomize_y0 && !(self.y0_range.0 < self.y0_range.1) {
            return invalid("y0_range must be a non-empty interval");
        }
        if !(self.escape_radius > 0.0) {
            return invalid("escape radius must be positive");
        }
        match self.scan_axis {
            ScanAxis::OrderQ => {
                if self.q_fixed.is_some() {
                    return invalid("q_fixed conflicts with a scan over q");
                }
                if !(self.axis_min > 0.0 && self.axis_max < 1.0) {
                    return invalid("a scan over q must stay inside (0, 1)");
                }
            }
            ScanAxis::ParamA | ScanAxis::InitX0 => {
                if let Some(q) = self.q_fixed {
                    if !(q > 0.0 && q < 1.0) {
                        return invalid(format!("q_fixed must lie in (0, 1), got {q}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn axis_values(&self) -> Vec<f64> {
        let span = self.axis_max - self.axis_min;
        let last = (self.axis_steps - 1) as f64;
        (0..self.axis_steps)
            .map(|i| if i + 1 == self.axis_steps { self.axis_max } else { self.axis_min + span * i as f64 / last })
            .collect()
    }

    /// Whether cells are run with the fractional solver.
    pub fn is_fractional(&self) -> bool {
        self.scan_axis == ScanAxis::OrderQ || self.q_fixed.is_some()
    }

    /// Map, order and initial value for cell `(axis index, ic index)`.
    pub fn cell_setup(&self, axis_index: usize, ic_index: usize, value: f64) -> (MapSpec, Option<f64>, ComplexPoint) {
        let ic = self.initial_conditions[ic_index];
        match self.scan_axis {
            ScanAxis::ParamA => (self.spec_template.with_a(value), self.q_fixed, ic),
            ScanAxis::OrderQ => (self.spec_template, Some(value), ic),
            ScanAxis::InitX0 => {
                let y0 = if self.randomize_y0 {
                    let cell = (ic_index * self.axis_steps + axis_index) as u64;
                    let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
                    rng.set_stream(cell);
                    rng.gen_range(self.y0_range.0..self.y0_range.1)
                } else {
                    ic.y
                };
                (self.spec_template, self.q_fixed, ComplexPoint::new(value, y0))
            }
        }
    }
}

/// The branch of a diagram generated by one initial condition.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BifurcativeSet {
    pub ic_index: usize,
    pub axis_values: Vec<f64>,
    /// Kept `x` values per axis value; empty for diverged cells.
    pub samples: Vec<Vec<f64>>,
    /// Initial value actually used in each cell.
    pub initial_values: Vec<ComplexPoint>,
    /// Axis indices whose orbit escaped.
    pub diverged: Vec<usize>,
}

impl BifurcativeSet {
    pub fn is_diverged(&self, axis_index: usize) -> bool {
        self.diverged.binary_search(&axis_index).is_ok()
    }

    pub fn sample_count(&self) -> usize {
        self.samples.iter().map(Vec::len).sum()
    }
}

enum CellResult {
    Kept(Vec<f64>),
    Diverged,
}

fn run_cell(cfg: &ScanConfig, axis_index: usize, ic_index: usize, value: f64) -> Result<(ComplexPoint, CellResult)> {
    let (spec, q, z0) = cfg.cell_setup(axis_index, ic_index, value);
    let orbit = match q {
        Some(q) => iterate_fo(&spec, z0, q, cfg.steps, cfg.escape_radius)?,
        None => iterate_io(&spec, z0, cfg.steps, cfg.escape_radius)?,
    };
    if orbit.is_diverged() {
        return Ok((z0, CellResult::Diverged));
    }
    Ok((z0, CellResult::Kept(orbit.points[cfg.discard + 1..].iter().map(|p| p.x).collect())))
}

/// Runs every cell of the scan; one [`BifurcativeSet`] per initial condition.
pub fn run_scan(cfg: &ScanConfig) -> Result<Vec<BifurcativeSet>> {
    cfg.validate()?;
    let axis = cfg.axis_values();
    let n_axis = axis.len();
    let n_cells = n_axis * cfg.initial_conditions.len();
    let cells: Vec<(ComplexPoint, CellResult)> = (0..n_cells)
        .into_par_iter()
        .map(|cell| {
            let (ic_index, axis_index) = (cell / n_axis, cell % n_axis);
            run_cell(cfg, axis_index, ic_index, axis[axis_index])
        })
        .collect::<Result<_>>()?;

    let mut sets: Vec<BifurcativeSet> = (0..cfg.initial_conditions.len())
        .map(|ic_index| BifurcativeSet {
            ic_index,
            axis_values: axis.clone(),
            samples: Vec::with_capacity(n_axis),
            initial_values: Vec::with_capacity(n_axis),
            diverged: Vec::new(),
        })
        .collect();
    for (cell, (z0, result)) in cells.into_iter().enumerate() {
        let set = &mut sets[cell / n_axis];
        set.initial_values.push(z0);
        match result {
            CellResult::Kept(xs) => set.samples.push(xs),
            CellResult::Diverged => {
                set.diverged.push(cell % n_axis);
                set.samples.push(Vec::new());
            }
        }
    }
    Ok(sets)
}

/// Writes `axis_value,ic_index,x` rows for the given sets.
pub fn write_scan_csv<W: Write>(mut w: W, sets: &[BifurcativeSet]) -> io::Result<()> {
    writeln!(w, "axis_value,ic_index,x")?;
    for set in sets {
        for (value, xs) in set.axis_values.iter().zip(&set.samples) {
            for x in xs {
                writeln!(w, "{value},{},{x}", set.ic_index)?;
            }
        }
    }
    Ok(())
}

fn nearest_axis_index(sets: &[BifurcativeSet], axis_value: f64) -> Result<usize> {
    let axis = match sets.first() {
        Some(s) => &s.axis_values,
        None => return invalid("no bifurcative sets"),
    };
    let (lo, hi) = (axis[0], axis[axis.len() - 1]);
    if !(axis_value >= lo && axis_value <= hi) {
        return invalid(format!("axis value {axis_value} outside scan range [{lo}, {hi}]"));
    }
    Ok(axis
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - axis_value).abs().total_cmp(&(b.1 - axis_value).abs()))
        .map(|(i, _)| i)
        .expect("non-empty axis"))
}

/// Poincaré-like section: the kept `x` values of every set at the grid point
/// nearest `axis_value`.
pub fn poincare_section(sets: &[BifurcativeSet], axis_value: f64) -> Result<Vec<(usize, Vec<f64>)>> {
    let i = nearest_axis_index(sets, axis_value)?;
    Ok(sets.iter().map(|s| (s.ic_index, s.samples[i].clone())).collect())
}

fn sorted(xs: &[f64]) -> Vec<f64> {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

fn nearest_in_sorted(sorted: &[f64], x: f64) -> f64 {
    let i = sorted.partition_point(|&v| v < x);
    let mut best = f64::INFINITY;
    if i < sorted.len() {
        best = best.min((sorted[i] - x).abs());
    }
    if i > 0 {
        best = best.min((x - sorted[i - 1]).abs());
    }
    best
}

fn one_sided(from: &[f64], to_sorted: &[f64]) -> f64 {
    from.iter().map(|&x| nearest_in_sorted(to_sorted, x)).sum::<f64>() / from.len() as f64
}

/// Symmetric mean nearest-neighbour distance between two multisets of
/// values. `NaN` when either side is empty.
pub fn slice_distance(a: &[f64], b: &[f64]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return f64::NAN;
    }
    let (sa, sb) = (sorted(a), sorted(b));
    0.5 * (one_sided(a, &sb) + one_sided(b, &sa))
}

/// Mean leave-one-out nearest-neighbour gap inside one slice: the resolution
/// of [`slice_distance`] for samples of a single attractor.
pub fn slice_spread(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return f64::NAN;
    }
    let s = sorted(xs);
    let n = s.len();
    let gap = |i: usize| -> f64 {
        let left = if i > 0 { s[i] - s[i - 1] } else { f64::INFINITY };
        let right = if i + 1 < n { s[i + 1] - s[i] } else { f64::INFINITY };
        left.min(right)
    };
    (0..n).map(gap).sum::<f64>() / n as f64
}

/// Pairwise [`slice_distance`] matrix of the Poincaré section at `axis_value`.
pub fn distinctness(sets: &[BifurcativeSet], axis_value: f64) -> Result<Vec<Vec<f64>>> {
    if sets.len() < 2 {
        return invalid("distinctness needs at least two sets");
    }
    let section = poincare_section(sets, axis_value)?;
    Ok(distance_matrix(&section.iter().map(|(_, xs)| xs.as_slice()).collect::<Vec<_>>()))
}

pub fn distance_matrix(slices: &[&[f64]]) -> Vec<Vec<f64>> {
    let n = slices.len();
    let mut d = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = slice_distance(slices[i], slices[j]);
            d[i][j] = v;
            d[j][i] = v;
        }
    }
    d
}

/// Length scale a slice is compared against when grouping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SliceScale {
    /// [`slice_spread`]: the sampling resolution of the slice.
    Resolution,
    /// `max - min` of the slice: plot resolution.
    Range,
}

pub fn slice_range(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return f64::NAN;
    }
    let (lo, hi) = xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| (lo.min(x), hi.max(x)));
    hi - lo
}

impl SliceScale {
    pub fn of(self, xs: &[f64]) -> f64 {
        match self {
            SliceScale::Resolution => slice_spread(xs),
            SliceScale::Range => slice_range(xs),
        }
    }
}

/// Groups slices by single linkage: two slices join when their
/// [`slice_distance`] is at most `factor` times the larger of their scales.
/// Empty (diverged) slices are skipped. Returns groups of slice indices,
/// ordered by first member.
pub fn group_slices(slices: &[&[f64]], scale: SliceScale, factor: f64) -> Vec<Vec<usize>> {
    let live: Vec<usize> = (0..slices.len()).filter(|&i| !slices[i].is_empty()).collect();
    let scales: Vec<f64> = slices.iter().map(|s| scale.of(s)).collect();
    let sorted: Vec<Vec<f64>> = slices.iter().map(|s| sorted(s)).collect();
    let mut parent: Vec<usize> = (0..slices.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for (n, &i) in live.iter().enumerate() {
        for &j in &live[n + 1..] {
            let d = 0.5 * (one_sided(slices[i], &sorted[j]) + one_sided(slices[j], &sorted[i]));
            if d <= factor * scales[i].max(scales[j]) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of_root: Vec<Option<usize>> = vec![None; slices.len()];
    for &i in &live {
        let r = find(&mut parent, i);
        match group_of_root[r] {
            Some(g) => groups[g].push(i),
            None => {
                group_of_root[r] = Some(groups.len());
                groups.push(vec![i]);
            }
        }
    }
    groups
}

/// True when every pair of non-empty slices is farther apart than the larger
/// of their resolutions times `factor`.
pub fn pairwise_distinct(slices: &[&[f64]], factor: f64) -> bool {
    let live: Vec<&[f64]> = slices.iter().copied().filter(|s| !s.is_empty()).collect();
    let d = distance_matrix(&live);
    (0..live.len()).all(|i| {
        (i + 1..live.len()).all(|j| d[i][j] > factor * slice_spread(live[i]).max(slice_spread(live[j])))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contraction_cfg(axis: ScanAxis) -> ScanConfig {
        let spec = MapSpec::dihedral(2, 0.5, 0.0, 0.0).unwrap();
        let ics = vec![ComplexPoint::new(1.0, 0.5), ComplexPoint::new(-0.3, 0.2)];
        let mut cfg = match axis {
            ScanAxis::ParamA => ScanConfig::io_param_a(spec, -0.6, 0.6, 7, ics),
            ScanAxis::OrderQ => ScanConfig::fo_order_q(spec, 0.2, 0.9, 5, ics),
            ScanAxis::InitX0 => ScanConfig::init_x0(spec, -1.0, 1.0, 6, 0.4, None),
        };
        cfg.steps = 120;
        cfg.discard = 60;
        cfg
    }

    fn brute_slice_distance(a: &[f64], b: &[f64]) -> f64 {
        let one = |from: &[f64], to: &[f64]| {
            from.iter().map(|x| to.iter().map(|y| (x - y).abs()).fold(f64::INFINITY, f64::min)).sum::<f64>()
                / from.len() as f64
        };
        0.5 * (one(a, b) + one(b, a))
    }

    #[test]
    fn contraction_collapses_to_origin() {
        for (axis, tol) in [(ScanAxis::ParamA, 1e-6), (ScanAxis::InitX0, 1e-6)] {
            let sets = run_scan(&contraction_cfg(axis)).unwrap();
            for set in &sets {
                assert!(set.diverged.is_empty());
                assert!(set.samples.iter().flatten().all(|x| x.abs() < tol), "{axis:?}");
            }
            let sec = poincare_section(&sets, sets[0].axis_values[2]).unwrap();
            assert!(sec.iter().all(|(_, xs)| xs.len() == 60 && xs.iter().all(|x| x.abs() < tol)));
        }
    }

    // In the fractional solver f is the increment, so f(z) = z/2 pushes orbits
    // away from the origin; f(z) = -z/2 attracts them, with power-law decay.
    #[test]
    fn fractional_contraction_decays() {
        let spec = MapSpec::dihedral(2, -0.5, 0.0, 0.0).unwrap();
        let mut cfg = ScanConfig::fo_order_q(spec, 0.5, 0.9, 3, vec![ComplexPoint::new(1.0, 0.0)]);
        cfg.steps = 400;
        cfg.discard = 300;
        let sets = run_scan(&cfg).unwrap();
        for xs in &sets[0].samples {
            assert!(xs.iter().all(|x| x.abs() < 0.1), "{xs:?}");
            assert!(xs.windows(2).all(|w| w[1].abs() <= w[0].abs()));
        }
    }

    #[test]
    fn axis_grid_endpoints() {
        let cfg = contraction_cfg(ScanAxis::ParamA);
        let v = cfg.axis_values();
        assert_eq!(v.len(), 7);
        assert_eq!(v[0], -0.6);
        assert_eq!(v[6], 0.6);
        assert!((v[3]).abs() < 1e-15);
    }

    #[test]
    fn invalid_configs_rejected() {
        let base = contraction_cfg(ScanAxis::ParamA);
        let cases: Vec<Box<dyn Fn(&mut ScanConfig)>> = vec![
            Box::new(|c| c.axis_max = c.axis_min),
            Box::new(|c| c.axis_steps = 1),
            Box::new(|c| c.discard = c.steps),
            Box::new(|c| c.initial_conditions.clear()),
            Box::new(|c| c.randomize_y0 = true),
            Box::new(|c| c.q_fixed = Some(1.2)),
            Box::new(|c| c.escape_radius = 0.0),
            Box::new(|c| {
                c.scan_axis = ScanAxis::OrderQ;
                c.axis_max = 1.0;
            }),
            Box::new(|c| {
                c.scan_axis = ScanAxis::OrderQ;
                c.axis_min = 0.1;
                c.axis_max = 0.5;
                c.q_fixed = Some(0.3);
            }),
        ];
        for (i, mutate) in cases.iter().enumerate() {
            let mut cfg = base.clone();
            mutate(&mut cfg);
            assert!(run_scan(&cfg).is_err(), "case {i}");
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let mut cfg = ScanConfig::init_x0(MapSpec::preset_dihedral().with_a(-1.755), -1.5, 1.5, 25, 0.0, None);
        cfg.randomize_y0 = true;
        cfg.seed = 11;
        cfg.steps = 400;
        cfg.discard = 300;
        let a = run_scan(&cfg).unwrap();
        let b = run_scan(&cfg).unwrap();
        assert_eq!(a, b);
        let ys: Vec<f64> = a[0].initial_values.iter().map(|z| z.y).collect();
        assert!(ys.iter().all(|y| (-1.0..1.0).contains(y)));
        assert!(ys.windows(2).any(|w| w[0] != w[1]));
        cfg.seed = 12;
        assert_ne!(run_scan(&cfg).unwrap()[0].initial_values, a[0].initial_values);
    }

    #[test]
    fn cells_are_independent_of_grid_order() {
        let mut cfg = ScanConfig::io_param_a(MapSpec::preset_dihedral(), -1.9, -1.0, 10, IO_INITIAL_CONDITIONS.to_vec());
        cfg.steps = 500;
        cfg.discard = 400;
        let sets = run_scan(&cfg).unwrap();
        // recompute the same cells in reverse order, one at a time
        let axis = cfg.axis_values();
        for ic in (0..cfg.initial_conditions.len()).rev() {
            for i in (0..axis.len()).rev() {
                let (spec, _, z0) = cfg.cell_setup(i, ic, axis[i]);
                let orbit = iterate_io(&spec, z0, cfg.steps, cfg.escape_radius).unwrap();
                let xs: Vec<f64> = if orbit.is_diverged() {
                    Vec::new()
                } else {
                    orbit.points[cfg.discard + 1..].iter().map(|p| p.x).collect()
                };
                assert_eq!(sets[ic].samples[i], xs);
            }
        }
    }

    #[test]
    fn diverged_cells_are_recorded() {
        let spec = MapSpec::dihedral(3, 1.5, 1.0, 0.5).unwrap();
        let mut cfg = ScanConfig::init_x0(spec, 0.0, 2.0, 5, 0.0, None);
        cfg.steps = 200;
        cfg.discard = 100;
        let sets = run_scan(&cfg).unwrap();
        assert!(!sets[0].diverged.is_empty());
        for &i in &sets[0].diverged {
            assert!(sets[0].is_diverged(i));
            assert!(sets[0].samples[i].is_empty());
        }
        assert!(sets[0].samples.iter().flatten().all(|x| x.is_finite()));
    }

    #[test]
    fn section_range_checked() {
        let sets = run_scan(&contraction_cfg(ScanAxis::ParamA)).unwrap();
        assert!(poincare_section(&sets, 0.61).is_err());
        assert!(poincare_section(&sets, -0.7).is_err());
        assert!(poincare_section(&[], 0.0).is_err());
        assert_eq!(poincare_section(&sets, 0.21).unwrap().len(), 2);
    }

    #[test]
    fn slice_distance_matches_brute_force() {
        let a = [0.3, -0.1, 0.25, 0.9, 0.91];
        let b = [0.0, 0.5, 0.52, -0.4];
        assert!((slice_distance(&a, &b) - brute_slice_distance(&a, &b)).abs() < 1e-15);
        assert_eq!(slice_distance(&a, &a), 0.0);
        assert!(slice_distance(&a, &[]).is_nan());
    }

    #[test]
    fn distinctness_of_identical_sets_is_zero() {
        let sets = run_scan(&contraction_cfg(ScanAxis::ParamA)).unwrap();
        let same = vec![sets[0].clone(), sets[0].clone()];
        let d = distinctness(&same, 0.0).unwrap();
        assert_eq!(d, vec![vec![0.0, 0.0], vec![0.0, 0.0]]);
        assert!(distinctness(&sets[..1], 0.0).is_err());
    }

    #[test]
    fn grouping() {
        let a = [0.0, 0.1, 0.2, 0.3];
        let a2 = [0.001, 0.101, 0.201, 0.301];
        let b = [5.0, 5.1, 5.2];
        let groups = group_slices(&[&a, &[], &b, &a2], SliceScale::Resolution, 1.0);
        assert_eq!(groups, vec![vec![0, 3], vec![2]]);
        assert!(pairwise_distinct(&[&a, &b], 1.0));
        assert!(!pairwise_distinct(&[&a, &a2], 1.0));
        assert!((slice_spread(&a) - 0.1).abs() < 1e-12);
        assert!((slice_range(&b) - 0.2).abs() < 1e-12);
    }

    #[test]
    fn csv_rows() {
        let set = BifurcativeSet {
            ic_index: 1,
            axis_values: vec![0.5, 1.0],
            samples: vec![vec![0.25], vec![]],
            initial_values: vec![ComplexPoint::ORIGIN; 2],
            diverged: vec![1],
        };
        let mut buf = Vec::new();
        write_scan_csv(&mut buf, &[set]).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "axis_value,ic_index,x\n0.5,1,0.25\n");
    }
}
