//! Trajectories and their CSV form.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::ComplexPoint;
use crate::maps::MapSpec;

/// Orbits escaping this radius are marked diverged.
pub const DEFAULT_ESCAPE_RADIUS: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Order {
    Integer,
    Fractional { q: f64 },
}

impl Order {
    pub fn q(self) -> Option<f64> {
        match self {
            Order::Integer => None,
            Order::Fractional { q } => Some(q),
        }
    }
}

/// A finite trajectory `z(0), …, z(N)`.
///
/// When `diverged_at = Some(k)`, the stored points end at index `k`, the first
/// point that left the escape disk (or became non-finite).
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub points: Vec<ComplexPoint>,
    pub map: MapSpec,
    pub order: Order,
    pub diverged_at: Option<usize>,
    pub discard: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_diverged(&self) -> bool {
        self.diverged_at.is_some()
    }

    pub fn initial(&self) -> ComplexPoint {
        self.points[0]
    }

    /// Points before divergence (all of them when bounded).
    pub fn bounded_points(&self) -> &[ComplexPoint] {
        match self.diverged_at {
            Some(k) => &self.points[..k],
            None => &self.points,
        }
    }

    /// Post-transient points, i.e. indices `discard..`. Fails if the orbit
    /// escaped before `discard`, or if fewer than `min_kept` points remain.
    pub fn post_transient(&self, discard: usize, min_kept: usize) -> Result<&[ComplexPoint]> {
        if let Some(k) = self.diverged_at {
            if k <= discard + min_kept {
                return Err(Error::DivergedBeforeDiscard(k));
            }
        }
        let pts = self.bounded_points();
        if pts.len() <= discard + min_kept {
            return Err(Error::OrbitTooShort { len: pts.len(), needed: discard + min_kept });
        }
        Ok(&pts[discard..])
    }

    pub fn xs(&self) -> Vec<f64> {
        self.bounded_points().iter().map(|p| p.x).collect()
    }

    /// Writes `n,x,y` rows. Fractional orbits get a leading `# q=<q>` comment.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        if let Order::Fractional { q } = self.order {
            writeln!(w, "# q={q}")?;
        }
        writeln!(w, "n,x,y")?;
        for (n, p) in self.points.iter().enumerate() {
            writeln!(w, "{n},{},{}", p.x, p.y)?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

/// Reads the points back from `n,x,y` CSV text (comment lines skipped).
pub fn read_orbit_csv(text: &str) -> Result<Vec<ComplexPoint>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line == "n,x,y" {
            continue;
        }
        let bad = || Error::Config { line: i + 1, msg: format!("bad orbit row `{line}`") };
        let mut cols = line.split(',');
        let (_, x, y) = (cols.next().ok_or_else(bad)?, cols.next().ok_or_else(bad)?, cols.next().ok_or_else(bad)?);
        out.push(ComplexPoint::new(x.parse().map_err(|_| bad())?, y.parse().map_err(|_| bad())?));
    }
    Ok(out)
}

pub(crate) fn escaped(z: ComplexPoint, radius: f64) -> bool {
    !z.is_finite() || z.modulus() > radius
}
