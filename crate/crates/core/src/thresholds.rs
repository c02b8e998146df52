//! Pass/fail thresholds used by the analysis routines, gathered in one place.
//!
//! None of these come from the underlying mathematics; they are calibrated
//! for `f64` arithmetic and desk-scale orbit lengths.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SymmetryThresholds {
    /// Max pointwise `|f(σz) − σf(z)|` for a map to count as equivariant.
    pub equivariance_pass: f64,
    /// Max pointwise defect above which a symmetry counts as broken.
    pub equivariance_fail: f64,
    /// Mean nearest-neighbour cloud defect below which an attractor counts as symmetric.
    pub cloud_pass: f64,
    /// A broken attractor's cloud defect must exceed this multiple of the symmetric one.
    pub cloud_break_factor: f64,
    /// Distance within which a point counts as lying on an attractor.
    pub membership_tol: f64,
    /// Termwise fractional solution-operator defect above which symmetry counts as broken.
    pub fo_break: f64,
    /// Termwise fractional solution-operator defect below which symmetry counts as kept.
    pub fo_keep: f64,
}

impl Default for SymmetryThresholds {
    fn default() -> Self {
        Self {
            equivariance_pass: 1e-10,
            equivariance_fail: 1e-3,
            cloud_pass: 0.02,
            cloud_break_factor: 10.0,
            membership_tol: 0.01,
            fo_break: 1e-3,
            fo_keep: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassifierThresholds {
    /// `max_n |x_{n+p} − x_n|` below this means period `p`.
    pub recurrence_eps: f64,
    pub max_period: usize,
    /// Quasiperiodic spectra carry at most this many dominant peaks.
    pub max_peaks: usize,
    /// Peak height over the spectral floor (median bin), in dB, for a bin to count as a peak.
    pub peak_floor_db: f64,
    /// Fraction of the (mean-removed) signal power that the dominant peaks must hold.
    pub peak_energy_fraction: f64,
}

impl Default for ClassifierThresholds {
    fn default() -> Self {
        Self { recurrence_eps: 1e-6, max_period: 64, max_peaks: 12, peak_floor_db: 20.0, peak_energy_fraction: 0.995 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistinctnessThresholds {
    /// Slices closer than this multiple of their sampling resolution are the same attractor.
    pub resolution_factor: f64,
    /// Slices closer than this fraction of their range coincide at plot resolution.
    pub range_fraction: f64,
}

impl Default for DistinctnessThresholds {
    fn default() -> Self {
        Self { resolution_factor: 1.0, range_fraction: 0.1 }
    }
}
