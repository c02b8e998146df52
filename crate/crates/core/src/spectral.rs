//! Periodogram and heuristic attractor labels.

use std::io::{self, Write};

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::orbit::Orbit;
use crate::thresholds::ClassifierThresholds;

pub const MIN_PSD_LEN: usize = 64;
pub const MIN_CLASSIFY_LEN: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Window {
    None,
    #[default]
    Hann,
}

impl Window {
    fn coefficients(self, n: usize) -> Vec<f64> {
        match self {
            Window::None => vec![1.0; n],
            Window::Hann => (0..n)
                .map(|i| 0.5 - 0.5 * (std::f64::consts::TAU * i as f64 / n as f64).cos())
                .collect(),
        }
    }

    /// Half-width, in bins, of a pure tone's main lobe.
    fn lobe_half_width(self) -> usize {
        match self {
            Window::None => 1,
            Window::Hann => 2,
        }
    }
}

/// One-sided periodogram: `freqs[k] = k/N` for `k = 0..=N/2`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub freqs: Vec<f64>,
    pub power: Vec<f64>,
    pub window: Window,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.freqs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.freqs.is_empty()
    }

    pub fn total_power(&self) -> f64 {
        self.power.iter().sum()
    }

    /// Median bin power, excluding DC.
    pub fn floor(&self) -> f64 {
        let mut p: Vec<f64> = self.power[1..].to_vec();
        p.sort_by(f64::total_cmp);
        p[p.len() / 2]
    }

    /// Local maxima (excluding DC) at least `db` decibels above the floor,
    /// strongest first.
    pub fn peaks(&self, db: f64) -> Vec<usize> {
        let level = self.floor() * 10f64.powf(db / 10.0);
        let n = self.power.len();
        let mut peaks: Vec<usize> = (1..n)
            .filter(|&k| {
                let p = self.power[k];
                p > level && p >= self.power[k - 1] && (k + 1 == n || p > self.power[k + 1])
            })
            .collect();
        peaks.sort_by(|&a, &b| self.power[b].total_cmp(&self.power[a]));
        peaks
    }

    /// Fraction of total power within the main lobes of the given peak bins.
    pub fn lobe_fraction(&self, peaks: &[usize]) -> f64 {
        let hw = self.window.lobe_half_width();
        let mut taken = vec![false; self.power.len()];
        for &k in peaks {
            for j in k.saturating_sub(hw)..=(k + hw).min(self.power.len() - 1) {
                taken[j] = true;
            }
        }
        let total = self.total_power();
        if total == 0.0 {
            return 0.0;
        }
        taken.iter().zip(&self.power).filter(|(t, _)| **t).map(|(_, p)| p).sum::<f64>() / total
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "freq,power")?;
        for (f, p) in self.freqs.iter().zip(&self.power) {
            writeln!(w, "{f},{p}")?;
        }
        Ok(())
    }
}

/// Largest power of two `<= n`.
fn pow2_floor(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        1 << (usize::BITS - 1 - n.leading_zeros())
    }
}

/// The mean-removed, windowed signal that [`psd`] transforms (after
/// truncation to a power-of-two length).
pub fn prepare_signal(x: &[f64], window: Window) -> Result<Vec<f64>> {
    if x.len() < MIN_PSD_LEN {
        return invalid(format!("need at least {MIN_PSD_LEN} samples, got {}", x.len()));
    }
    if x.iter().any(|v| !v.is_finite()) {
        return invalid("signal contains non-finite samples");
    }
    let n = pow2_floor(x.len());
    let x = &x[..n];
    let mean = x.iter().sum::<f64>() / n as f64;
    Ok(x.iter().zip(window.coefficients(n)).map(|(v, w)| (v - mean) * w).collect())
}

/// Periodogram of `x`, normalised so the bins sum to the energy of the
/// prepared signal.
pub fn psd(x: &[f64], window: Window) -> Result<Spectrum> {
    let signal = prepare_signal(x, window)?;
    let n = signal.len();
    let mut buf: Vec<Complex<f64>> = signal.iter().map(|&v| Complex::new(v, 0.0)).collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let half = n / 2;
    let power = (0..=half)
        .map(|k| {
            let p = buf[k].norm_sqr() / n as f64;
            if k == 0 || k == half { p } else { 2.0 * p }
        })
        .collect();
    let freqs = (0..=half).map(|k| k as f64 / n as f64).collect();
    Ok(Spectrum { freqs, power, window })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Label {
    PeriodicLike,
    QuasiperiodicLike,
    Chaotic,
    Diverged,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttractorLabel {
    pub label: Label,
    /// Frequencies of the strongest peaks, strongest first.
    pub dominant_freqs: Vec<f64>,
    pub peak_count: usize,
    /// Detected period, for periodic-like sequences.
    pub period: Option<usize>,
    /// Share of signal power in the main lobes of the dominant peaks.
    pub peak_energy: f64,
}

/// Smallest `p <= max_period` with `max_n |x[n+p] - x[n]| < eps`.
pub fn recurrence_period(x: &[f64], max_period: usize, eps: f64) -> Option<usize> {
    (1..=max_period.min(x.len().saturating_sub(1)))
        .find(|&p| x.iter().zip(&x[p..]).all(|(a, b)| (b - a).abs() < eps))
}

pub fn classify_series(x: &[f64], th: &ClassifierThresholds) -> Result<AttractorLabel> {
    if x.len() < MIN_CLASSIFY_LEN {
        return invalid(format!("need at least {MIN_CLASSIFY_LEN} samples, got {}", x.len()));
    }
    let spectrum = psd(x, Window::Hann)?;
    // a flat series leaves only rounding noise once the mean is removed
    let (lo, hi) = x.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let peaks = if hi - lo < th.recurrence_eps { Vec::new() } else { spectrum.peaks(th.peak_floor_db) };
    let dominant: Vec<usize> = peaks.iter().copied().take(th.max_peaks).collect();
    let peak_energy = spectrum.lobe_fraction(&dominant);
    let dominant_freqs = dominant.iter().map(|&k| spectrum.freqs[k]).collect();

    let period = recurrence_period(x, th.max_period, th.recurrence_eps);
    let label = if period.is_some() {
        Label::PeriodicLike
    } else if !dominant.is_empty() && peak_energy >= th.peak_energy_fraction {
        Label::QuasiperiodicLike
    } else {
        Label::Chaotic
    };
    Ok(AttractorLabel { label, dominant_freqs, peak_count: peaks.len(), period, peak_energy })
}

/// Labels the post-transient `x` sequence of `orbit`.
pub fn classify(orbit: &Orbit, discard: usize) -> Result<AttractorLabel> {
    classify_with(orbit, discard, &ClassifierThresholds::default())
}

pub fn classify_with(orbit: &Orbit, discard: usize, th: &ClassifierThresholds) -> Result<AttractorLabel> {
    if orbit.is_diverged() {
        return Ok(AttractorLabel {
            label: Label::Diverged,
            dominant_freqs: Vec::new(),
            peak_count: 0,
            period: None,
            peak_energy: 0.0,
        });
    }
    if orbit.len() < discard + MIN_CLASSIFY_LEN {
        return invalid(format!(
            "orbit has {} points; classification needs {} after discarding {discard}",
            orbit.len(),
            MIN_CLASSIFY_LEN
        ));
    }
    let xs: Vec<f64> = orbit.points[discard..].iter().map(|p| p.x).collect();
    classify_series(&xs, th)
}
