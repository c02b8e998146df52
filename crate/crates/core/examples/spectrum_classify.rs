//! Power spectra of x(n) and the resulting attractor labels.
//!
//! Usage: cargo run --release --example spectrum_classify [out_dir]

use std::fs;
use std::path::PathBuf;

use symfrac::spectral::{classify, psd, Window};
use symfrac::{iterate_fo, iterate_io, ComplexPoint, MapSpec, DEFAULT_ESCAPE_RADIUS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "out".into()));
    fs::create_dir_all(&dir)?;
    let spec = MapSpec::preset_dihedral();

    let runs = [
        ("io a=-1.804", iterate_io(&spec, ComplexPoint::new(0.05, 0.1), 20_000, DEFAULT_ESCAPE_RADIUS)?),
        ("io a=-1.755", iterate_io(&spec.with_a(-1.755), ComplexPoint::new(0.05, 0.1), 20_000, DEFAULT_ESCAPE_RADIUS)?),
        ("io a=-0.8", iterate_io(&spec.with_a(-0.8), ComplexPoint::new(0.05, 0.1), 20_000, DEFAULT_ESCAPE_RADIUS)?),
        ("fo q=0.057", iterate_fo(&spec, ComplexPoint::new(0.001, 0.9667), 0.057, 4000, DEFAULT_ESCAPE_RADIUS)?),
    ];
    for (i, (name, orbit)) in runs.iter().enumerate() {
        let label = classify(orbit, 1500)?;
        let freqs: Vec<String> = label.dominant_freqs.iter().take(4).map(|f| format!("{f:.4}")).collect();
        println!(
            "{name:<12} {:<18} period {:?}  peaks {}  energy {:.4}  [{}]",
            format!("{:?}", label.label),
            label.period,
            label.peak_count,
            label.peak_energy,
            freqs.join(", ")
        );
        if !orbit.is_diverged() {
            let xs: Vec<f64> = orbit.xs().into_iter().skip(1500).collect();
            psd(&xs, Window::Hann)?.write_csv(fs::File::create(dir.join(format!("psd_{i}.csv")))?)?;
        }
    }
    Ok(())
}
