//! Caputo-type fractional-order iteration.
//!
//! For `0 < q < 1` and start point `0`, the solution of `Δ^q_* z(t) = f(z(t+q-1))`,
//! `z(0) = z₀`, is the memory sum
//!
//! ```text
//! z(n) = z₀ + Σ_{k=1..n} w[n-k] · f(z(k-1)),   w[j] = Γ(j+q) / (Γ(q) Γ(j+1)).
//! ```
//!
//! The weights are generated by `w[0] = 1`, `w[j] = w[j-1]·(j-1+q)/j`, which
//! never touches `Γ` (it overflows near `j ≈ 170`). Each step is one dot
//! product over the cached history `f(z(0)), …, f(z(n-1))`, so a run of `N`
//! steps costs `O(N²)` time and `O(N)` memory.

use crate::error::{invalid, Result};
use crate::group::ComplexPoint;
use crate::maps::MapSpec;
use crate::orbit::{escaped, Orbit, Order, DEFAULT_ESCAPE_RADIUS};

/// Memory kernel `w[0..n)` for order `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct CaputoWeights {
    q: f64,
    w: Vec<f64>,
}

impl CaputoWeights {
    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }
}

fn check_order(q: f64) -> Result<()> {
    if !(q > 0.0 && q < 1.0) {
        return invalid(format!("fractional order q must lie in (0, 1), got {q}"));
    }
    Ok(())
}

pub fn weights(q: f64, n: usize) -> Result<CaputoWeights> {
    check_order(q)?;
    if n < 1 {
        return invalid("weight count must be at least 1");
    }
    let mut w = Vec::with_capacity(n);
    w.push(1.0);
    for j in 1..n {
        let prev = w[j - 1];
        w.push(prev * ((j - 1) as f64 + q) / j as f64);
    }
    Ok(CaputoWeights { q, w })
}

/// `Σ_{k=lo..=n} w[n-k] · history[k-1]` for `history.len() == n`, where
/// `lo = 1` (full memory) or `n - memory + 1`.
#[inline]
pub(crate) fn memory_sum(w: &[f64], history: &[f64], memory: Option<usize>) -> f64 {
    let n = history.len();
    let start = memory.map_or(0, |l| n.saturating_sub(l));
    w[..n - start].iter().rev().zip(&history[start..]).map(|(a, b)| a * b).sum()
}

/// Solver knobs beyond `q` and the step count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FoSettings {
    pub escape_radius: f64,
    /// Keep only the last `memory` history terms. `None` (the default) uses
    /// the full memory, which the symmetry results depend on.
    pub memory: Option<usize>,
}

impl Default for FoSettings {
    fn default() -> Self {
        Self { escape_radius: DEFAULT_ESCAPE_RADIUS, memory: None }
    }
}

pub fn iterate_fo(spec: &MapSpec, z0: ComplexPoint, q: f64, steps: usize, escape_radius: f64) -> Result<Orbit> {
    iterate_fo_with(spec, z0, q, steps, &FoSettings { escape_radius, memory: None })
}

pub fn iterate_fo_with(
    spec: &MapSpec,
    z0: ComplexPoint,
    q: f64,
    steps: usize,
    settings: &FoSettings,
) -> Result<Orbit> {
    if steps < 1 {
        return invalid("steps must be at least 1");
    }
    if !(settings.escape_radius > 0.0) {
        return invalid("escape radius must be positive");
    }
    if settings.memory == Some(0) {
        return invalid("memory length must be at least 1");
    }
    let kernel = weights(q, steps)?;
    let w = kernel.as_slice();

    let mut points = Vec::with_capacity(steps + 1);
    points.push(z0);
    let mut fx = Vec::with_capacity(steps);
    let mut fy = Vec::with_capacity(steps);
    let mut diverged_at = escaped(z0, settings.escape_radius).then_some(0);
    if diverged_at.is_none() {
        let mut z = z0;
        for n in 1..=steps {
            let fz = spec.eval(z);
            fx.push(fz.x);
            fy.push(fz.y);
            z = ComplexPoint::new(
                z0.x + memory_sum(w, &fx, settings.memory),
                z0.y + memory_sum(w, &fy, settings.memory),
            );
            points.push(z);
            if escaped(z, settings.escape_radius) {
                diverged_at = Some(n);
                break;
            }
        }
    }
    Ok(Orbit { points, map: *spec, order: Order::Fractional { q }, diverged_at, discard: 0 })
}

/// Scalar version of [`iterate_fo`] for `f: ℝ → ℝ`. Returns `u(0..=steps)`;
/// no escape check.
pub fn iterate_fo_real<F: Fn(f64) -> f64>(f: F, u0: f64, q: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 1 {
        return invalid("steps must be at least 1");
    }
    let kernel = weights(q, steps)?;
    let w = kernel.as_slice();
    let mut u = Vec::with_capacity(steps + 1);
    u.push(u0);
    let mut history = Vec::with_capacity(steps);
    for _ in 1..=steps {
        history.push(f(*u.last().unwrap()));
        u.push(u0 + memory_sum(w, &history, None));
    }
    Ok(u)
}
