//! Command-line front end: `simulate`, `bifurcation` and `symmetry`.
//!
//! Every command reads an optional `key = value` config file (`--config`)
//! and lets flags override it. Exit codes: 0 success, 1 I/O failure,
//! 2 invalid flags or config, 3 orbit diverged before the transient was
//! discarded, 4 a symmetry check did not show the expected pattern.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::bifurcation::{run_scan, write_scan_csv, ScanAxis, ScanConfig, FO_INITIAL_CONDITIONS, IO_INITIAL_CONDITIONS};
use crate::caputo::{iterate_fo_with, FoSettings};
use crate::group::{elements, parse_element, ComplexPoint, GroupElement};
use crate::iterate::iterate_io;
use crate::kv::KvBlock;
use crate::maps::{MapSpec, CONFIG_KEYS};
use crate::orbit::{Orbit, DEFAULT_ESCAPE_RADIUS};
use crate::plot::{Bounds, Canvas, PALETTE};
use crate::symmetry::{
    check_equivariance, expected_equivariant, fo_solution_defect, orbit_symmetry_defect, write_report_csv, ReportRow,
};
use crate::thresholds::SymmetryThresholds;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DIVERGED: i32 = 3;
pub const EXIT_PATTERN: i32 = 4;

const PLOT_SIZE: (usize, usize) = (1000, 1000);

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("orbit diverged at step {0}, before the transient of {1} steps was discarded")]
    Diverged(usize, usize),
    #[error("symmetry checks did not show the expected pattern")]
    Pattern,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Diverged(..) => EXIT_DIVERGED,
            CliError::Pattern => EXIT_PATTERN,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "symfrac", version, about = "Symmetric integer- and fractional-order maps of the complex plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Iterate one orbit and write it as CSV (plus an optional PNG).
    Simulate(SimulateArgs),
    /// Scan a parameter, the fractional order or x0; one CSV per initial condition.
    Bifurcation(BifurcationArgs),
    /// Check map equivariance or orbit symmetry against the expected pattern.
    Symmetry(SymmetryArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct MapArgs {
    /// `key = value` file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// dihedral | cyclic | dihedral-re
    #[arg(long = "map")]
    pub kind: Option<String>,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub n_power: Option<u32>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// io | fo
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long)]
    pub x0: Option<f64>,
    #[arg(long)]
    pub y0: Option<f64>,
    /// Defaults to 100000 (io) or 10000 (fo).
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub discard: Option<usize>,
    #[arg(long)]
    pub escape: Option<f64>,
    /// Truncate the fractional memory to this many terms.
    #[arg(long)]
    pub memory: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "orbit.csv")]
    pub out: PathBuf,
    /// Scatter plot of the post-transient points.
    #[arg(long)]
    pub plot: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct BifurcationArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// a | q | x0
    #[arg(long)]
    pub axis: Option<String>,
    #[arg(long)]
    pub min: Option<f64>,
    #[arg(long)]
    pub max: Option<f64>,
    #[arg(long)]
    pub steps_axis: Option<usize>,
    /// io | fo (a scan over q is always fo)
    #[arg(long)]
    pub order: Option<String>,
    /// Fixed fractional order for fo scans over a or x0.
    #[arg(long)]
    pub q: Option<f64>,
    /// Initial condition `x,y`; repeat for several.
    #[arg(long = "ic", allow_hyphen_values = true)]
    pub ics: Vec<String>,
    /// Fixed y0 for scans over x0.
    #[arg(long)]
    pub y0: Option<f64>,
    #[arg(long)]
    pub randomize_y0: bool,
    #[arg(long)]
    pub y0_min: Option<f64>,
    #[arg(long)]
    pub y0_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub discard: Option<usize>,
    #[arg(long)]
    pub escape: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value = "bifurcation")]
    pub out_prefix: PathBuf,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct SymmetryArgs {
    #[command(flatten)]
    pub map: MapArgs,
    /// equivariance | orbit
    #[arg(long, default_value = "equivariance")]
    pub check: String,
    /// `R<k>` or `S<k>`; all 2m elements when omitted.
    #[arg(long)]
    pub element: Option<String>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// io | fo, for orbit checks
    #[arg(long)]
    pub order: Option<String>,
    #[arg(long)]
    pub q: Option<f64>,
    #[arg(long)]
    pub x0: Option<f64>,
    #[arg(long)]
    pub y0: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long)]
    pub discard: Option<usize>,
    /// Also write the report as CSV.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Written next to the outputs once everything else has been written.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub config: serde_json::Value,
    pub seed: u64,
    pub artifacts: Vec<Artifact>,
    pub tool_version: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Artifact {
    pub path: String,
    /// Data rows (header and comment lines excluded) for CSV files.
    pub rows: Option<usize>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut stdout = io::stdout().lock();
    match execute(&cli.command, &mut stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute<W: Write>(command: &Command, out: &mut W) -> CliResult<()> {
    match command {
        Command::Simulate(a) => cmd_simulate(a, out),
        Command::Bifurcation(a) => cmd_bifurcation(a, out),
        Command::Symmetry(a) => cmd_symmetry(a, out),
    }
}

fn load_config(path: &Option<PathBuf>) -> CliResult<KvBlock> {
    match path {
        None => Ok(KvBlock::default()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))?;
            Ok(KvBlock::parse(&text)?)
        }
    }
}

fn set<T: ToString>(kv: &mut KvBlock, key: &str, v: &Option<T>) {
    if let Some(v) = v {
        kv.insert(key, v.to_string());
    }
}

impl MapArgs {
    fn overlay(&self, kv: &mut KvBlock) {
        set(kv, "kind", &self.kind);
        set(kv, "m", &self.m);
        set(kv, "a", &self.a);
        set(kv, "b", &self.b);
        set(kv, "c", &self.c);
        set(kv, "d", &self.d);
        set(kv, "gamma", &self.gamma);
        set(kv, "n_power", &self.n_power);
    }
}

fn map_from(kv: &KvBlock) -> CliResult<MapSpec> {
    let mut map_kv = KvBlock::default();
    for key in CONFIG_KEYS {
        if let Some(v) = kv.get_str(key) {
            map_kv.insert(key, v);
        }
    }
    Ok(MapSpec::from_kv(&map_kv)?)
}

fn check_keys(kv: &KvBlock, extra: &[&str]) -> CliResult<()> {
    let allowed: Vec<&str> = CONFIG_KEYS.iter().chain(extra).copied().collect();
    Ok(kv.check_keys(&allowed)?)
}

fn get<T: std::str::FromStr>(kv: &KvBlock, key: &str) -> CliResult<Option<T>> {
    Ok(kv.get(key)?)
}

fn parse_fractional(kv: &KvBlock, default_fo: bool) -> CliResult<Option<f64>> {
    let fo = match kv.get_str("order") {
        None => default_fo,
        Some("io") => false,
        Some("fo") => true,
        Some(other) => return Err(CliError::Usage(format!("--order must be io or fo, got `{other}`"))),
    };
    let q: Option<f64> = get(kv, "q")?;
    match (fo, q) {
        (true, Some(q)) => Ok(Some(q)),
        (true, None) => Err(CliError::Usage("--order fo requires --q".into())),
        (false, _) => Ok(None),
    }
}

fn write_manifest(path: &Path, manifest: &RunManifest) -> CliResult<()> {
    let text = serde_json::to_string_pretty(manifest).map_err(io::Error::other)?;
    fs::write(path, text + "\n")?;
    Ok(())
}

fn manifest_path(base: &Path) -> PathBuf {
    base.with_extension("manifest.json")
}

fn csv_artifact(path: &Path, rows: usize) -> Artifact {
    Artifact { path: path.display().to_string(), rows: Some(rows) }
}

fn file_artifact(path: &Path) -> Artifact {
    Artifact { path: path.display().to_string(), rows: None }
}

fn version() -> String {
    env!("CARGO_PKG_VERSION").to_string()
}

#[derive(Debug, Clone, Serialize)]
struct SimulateSettings {
    map: MapSpec,
    q: Option<f64>,
    z0: ComplexPoint,
    steps: usize,
    discard: usize,
    escape_radius: f64,
    memory: Option<usize>,
}

const SIMULATE_KEYS: [&str; 9] = ["order", "q", "x0", "y0", "steps", "discard", "escape", "memory", "seed"];

pub fn cmd_simulate<W: Write>(args: &SimulateArgs, out: &mut W) -> CliResult<()> {
    let mut kv = load_config(&args.map.config)?;
    check_keys(&kv, &SIMULATE_KEYS)?;
    args.map.overlay(&mut kv);
    set(&mut kv, "order", &args.order);
    set(&mut kv, "q", &args.q);
    set(&mut kv, "x0", &args.x0);
    set(&mut kv, "y0", &args.y0);
    set(&mut kv, "steps", &args.steps);
    set(&mut kv, "discard", &args.discard);
    set(&mut kv, "escape", &args.escape);
    set(&mut kv, "memory", &args.memory);
    set(&mut kv, "seed", &args.seed);

    let map = map_from(&kv)?;
    let q = parse_fractional(&kv, false)?;
    let settings = SimulateSettings {
        map,
        q,
        z0: ComplexPoint::new(get(&kv, "x0")?.unwrap_or(0.0), get(&kv, "y0")?.unwrap_or(0.0)),
        steps: get(&kv, "steps")?.unwrap_or(if q.is_some() { 10_000 } else { 100_000 }),
        discard: get(&kv, "discard")?.unwrap_or(1000),
        escape_radius: get(&kv, "escape")?.unwrap_or(DEFAULT_ESCAPE_RADIUS),
        memory: get(&kv, "memory")?,
    };
    let seed: u64 = get(&kv, "seed")?.unwrap_or(0);
    if settings.discard >= settings.steps {
        return Err(CliError::Usage("--discard must be below --steps".into()));
    }

    let orbit = match settings.q {
        Some(q) => iterate_fo_with(
            &map,
            settings.z0,
            q,
            settings.steps,
            &FoSettings { escape_radius: settings.escape_radius, memory: settings.memory },
        )?,
        None => iterate_io(&map, settings.z0, settings.steps, settings.escape_radius)?,
    };
    let mut file = io::BufWriter::new(fs::File::create(&args.out)?);
    orbit.write_csv(&mut file)?;
    file.flush()?;
    if let Some(k) = orbit.diverged_at {
        if k <= settings.discard {
            return Err(CliError::Diverged(k, settings.discard));
        }
    }

    let mut artifacts = vec![csv_artifact(&args.out, orbit.len())];
    if let Some(plot) = &args.plot {
        save_orbit_plot(&orbit, settings.discard, plot)?;
        artifacts.push(file_artifact(plot));
    }
    writeln!(
        out,
        "wrote {} points to {}{}",
        orbit.len(),
        args.out.display(),
        orbit.diverged_at.map_or(String::new(), |k| format!(" (diverged at step {k})"))
    )?;
    let manifest = RunManifest {
        command: "simulate".into(),
        config: serde_json::to_value(&settings).map_err(io::Error::other)?,
        seed,
        artifacts,
        tool_version: version(),
    };
    write_manifest(&manifest_path(&args.out), &manifest)
}

fn save_orbit_plot(orbit: &Orbit, discard: usize, path: &Path) -> CliResult<()> {
    let pts: Vec<(f64, f64)> = orbit.bounded_points().iter().skip(discard).map(|p| (p.x, p.y)).collect();
    let mut canvas = Canvas::new(PLOT_SIZE.0, PLOT_SIZE.1, Bounds::fit(&pts));
    canvas.scatter(&pts, PALETTE[3]);
    canvas.save_png(path)?;
    Ok(())
}

const BIFURCATION_KEYS: [&str; 15] = [
    "axis", "min", "max", "steps_axis", "order", "q", "ics", "y0", "randomize_y0", "y0_min", "y0_max", "steps",
    "discard", "escape", "seed",
];

fn parse_ics(text: &str) -> CliResult<Vec<ComplexPoint>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| CliError::Usage(format!("initial condition `{pair}` must be `x,y`")))?;
            let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| CliError::Usage(format!("bad number in `{pair}`")));
            Ok(ComplexPoint::new(parse(x)?, parse(y)?))
        })
        .collect()
}

/// Resolves bifurcation flags and config into a validated [`ScanConfig`].
pub fn scan_config_from(args: &BifurcationArgs) -> CliResult<ScanConfig> {
    let mut kv = load_config(&args.map.config)?;
    check_keys(&kv, &BIFURCATION_KEYS)?;
    args.map.overlay(&mut kv);
    set(&mut kv, "axis", &args.axis);
    set(&mut kv, "min", &args.min);
    set(&mut kv, "max", &args.max);
    set(&mut kv, "steps_axis", &args.steps_axis);
    set(&mut kv, "order", &args.order);
    set(&mut kv, "q", &args.q);
    if !args.ics.is_empty() {
        kv.insert("ics", args.ics.join(";"));
    }
    set(&mut kv, "y0", &args.y0);
    if args.randomize_y0 {
        kv.insert("randomize_y0", true);
    }
    set(&mut kv, "y0_min", &args.y0_min);
    set(&mut kv, "y0_max", &args.y0_max);
    set(&mut kv, "steps", &args.steps);
    set(&mut kv, "discard", &args.discard);
    set(&mut kv, "escape", &args.escape);
    set(&mut kv, "seed", &args.seed);

    let map = map_from(&kv)?;
    let axis = match kv.get_str("axis") {
        Some("a") => ScanAxis::ParamA,
        Some("q") => ScanAxis::OrderQ,
        Some("x0") => ScanAxis::InitX0,
        Some(other) => return Err(CliError::Usage(format!("--axis must be a, q or x0, got `{other}`"))),
        None => return Err(CliError::Usage("--axis is required".into())),
    };
    let min: f64 = get(&kv, "min")?.ok_or_else(|| CliError::Usage("--min is required".into()))?;
    let max: f64 = get(&kv, "max")?.ok_or_else(|| CliError::Usage("--max is required".into()))?;
    let steps_axis: usize = get(&kv, "steps_axis")?.unwrap_or(500);
    let ics = kv.get_str("ics").map(parse_ics).transpose()?;

    let mut cfg = match axis {
        ScanAxis::OrderQ => {
            if kv.get_str("order") == Some("io") {
                return Err(CliError::Usage("a scan over q needs --order fo".into()));
            }
            ScanConfig::fo_order_q(map, min, max, steps_axis, ics.unwrap_or_else(|| FO_INITIAL_CONDITIONS.to_vec()))
        }
        ScanAxis::ParamA => {
            let q = parse_fractional(&kv, false)?;
            let mut cfg =
                ScanConfig::io_param_a(map, min, max, steps_axis, ics.unwrap_or_else(|| IO_INITIAL_CONDITIONS.to_vec()));
            if q.is_some() {
                (cfg.steps, cfg.discard) = (700, 500);
            }
            cfg.q_fixed = q;
            cfg
        }
        ScanAxis::InitX0 => {
            let q = parse_fractional(&kv, false)?;
            let y0: f64 = get(&kv, "y0")?.unwrap_or(0.0);
            let mut cfg = ScanConfig::init_x0(map, min, max, steps_axis, y0, q);
            if let Some(ics) = ics {
                cfg.initial_conditions = ics;
            }
            cfg
        }
    };
    cfg.randomize_y0 = get::<bool>(&kv, "randomize_y0")?.unwrap_or(false);
    cfg.y0_range = (get(&kv, "y0_min")?.unwrap_or(cfg.y0_range.0), get(&kv, "y0_max")?.unwrap_or(cfg.y0_range.1));
    cfg.steps = get(&kv, "steps")?.unwrap_or(cfg.steps);
    cfg.discard = get(&kv, "discard")?.unwrap_or(cfg.discard);
    cfg.escape_radius = get(&kv, "escape")?.unwrap_or(cfg.escape_radius);
    cfg.seed = get(&kv, "seed")?.unwrap_or(0);
    cfg.validate()?;
    Ok(cfg)
}

fn prefixed(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.file_name().map(|s| s.to_os_string()).unwrap_or_else(|| "bifurcation".into());
    name.push(suffix);
    prefix.with_file_name(name)
}

pub fn cmd_bifurcation<W: Write>(args: &BifurcationArgs, out: &mut W) -> CliResult<()> {
    let cfg = scan_config_from(args)?;
    let sets = run_scan(&cfg)?;
    let mut artifacts = Vec::new();
    for set in &sets {
        let path = prefixed(&args.out_prefix, &format!("_ic{}.csv", set.ic_index));
        let mut file = io::BufWriter::new(fs::File::create(&path)?);
        write_scan_csv(&mut file, std::slice::from_ref(set))?;
        file.flush()?;
        artifacts.push(csv_artifact(&path, set.sample_count()));
        writeln!(
            out,
            "ic {} ({}, {}): {} samples, {} diverged cells -> {}",
            set.ic_index,
            cfg.initial_conditions[set.ic_index].x,
            cfg.initial_conditions[set.ic_index].y,
            set.sample_count(),
            set.diverged.len(),
            path.display()
        )?;
    }

    let pts: Vec<Vec<(f64, f64)>> = sets
        .iter()
        .map(|s| s.axis_values.iter().zip(&s.samples).flat_map(|(&v, xs)| xs.iter().map(move |&x| (v, x))).collect())
        .collect();
    let bounds = Bounds::fit(pts.iter().flatten());
    let mut canvas = Canvas::new(PLOT_SIZE.0, PLOT_SIZE.1 * 3 / 5, bounds);
    for (i, series) in pts.iter().enumerate() {
        canvas.scatter(series, PALETTE[i % PALETTE.len()]);
    }
    let png = prefixed(&args.out_prefix, ".png");
    canvas.save_png(&png)?;
    artifacts.push(file_artifact(&png));

    let manifest = RunManifest {
        command: "bifurcation".into(),
        config: serde_json::to_value(&cfg).map_err(io::Error::other)?,
        seed: cfg.seed,
        artifacts,
        tool_version: version(),
    };
    write_manifest(&prefixed(&args.out_prefix, ".manifest.json"), &manifest)
}

/// One evaluated check and whether it came out as the theory predicts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub row: ReportRow,
    pub expect_symmetric: bool,
    pub as_expected: bool,
}

const SYMMETRY_KEYS: [&str; 11] =
    ["check", "element", "samples", "radius", "seed", "order", "q", "x0", "y0", "steps", "discard"];

pub struct SymmetryRun {
    pub map: MapSpec,
    pub seed: u64,
    pub outcomes: Vec<CheckOutcome>,
}

pub fn run_symmetry_checks(args: &SymmetryArgs) -> CliResult<SymmetryRun> {
    let mut kv = load_config(&args.map.config)?;
    check_keys(&kv, &SYMMETRY_KEYS)?;
    args.map.overlay(&mut kv);
    kv.insert("check", &args.check);
    set(&mut kv, "element", &args.element);
    set(&mut kv, "samples", &args.samples);
    set(&mut kv, "radius", &args.radius);
    set(&mut kv, "seed", &args.seed);
    set(&mut kv, "order", &args.order);
    set(&mut kv, "q", &args.q);
    set(&mut kv, "x0", &args.x0);
    set(&mut kv, "y0", &args.y0);
    set(&mut kv, "steps", &args.steps);
    set(&mut kv, "discard", &args.discard);

    let map = map_from(&kv)?;
    let th = SymmetryThresholds::default();
    let group: Vec<GroupElement> = match kv.get_str("element") {
        Some(label) => vec![parse_element(label, map.m)?],
        None => elements(map.m)?,
    };
    let seed: u64 = get(&kv, "seed")?.unwrap_or(0);
    let z0 = ComplexPoint::new(get(&kv, "x0")?.unwrap_or(0.05), get(&kv, "y0")?.unwrap_or(0.1));

    let mut outcomes = Vec::new();
    match kv.get_str("check") {
        Some("equivariance") => {
            let samples: usize = get(&kv, "samples")?.unwrap_or(1000);
            let radius: f64 = get(&kv, "radius")?.unwrap_or(1.5);
            for g in group {
                let r = check_equivariance(&map, g, samples, radius, seed)?;
                let expect = expected_equivariant(map.kind, g);
                let ok = if expect { r.max_defect < th.equivariance_pass } else { r.max_defect > th.equivariance_fail };
                outcomes.push(CheckOutcome { row: (&r).into(), expect_symmetric: expect, as_expected: ok });
            }
        }
        Some("orbit") => match parse_fractional(&kv, false)? {
            None => {
                let steps: usize = get(&kv, "steps")?.unwrap_or(100_000);
                let discard: usize = get(&kv, "discard")?.unwrap_or(1000);
                let orbit = iterate_io(&map, z0, steps, DEFAULT_ESCAPE_RADIUS)?;
                if let Some(k) = orbit.diverged_at.filter(|&k| k <= discard) {
                    return Err(CliError::Diverged(k, discard));
                }
                for g in group {
                    let r = orbit_symmetry_defect(&orbit, g, discard)?;
                    let expect = expected_equivariant(map.kind, g);
                    let ok = if expect { r.defect < th.cloud_pass } else { r.defect >= th.cloud_pass };
                    outcomes.push(CheckOutcome { row: (&r).into(), expect_symmetric: expect, as_expected: ok });
                }
            }
            Some(q) => {
                let steps: usize = get(&kv, "steps")?.unwrap_or(200);
                for g in group {
                    let r = fo_solution_defect(&map, z0, q, g, steps)?;
                    // the fixed initial value breaks every element that moves it
                    let expect = expected_equivariant(map.kind, g) && g.apply(z0).dist(z0) <= th.fo_keep;
                    let d = r.max_defect();
                    let ok = if expect { d < th.fo_keep } else { d > th.fo_break };
                    outcomes.push(CheckOutcome { row: (&r).into(), expect_symmetric: expect, as_expected: ok });
                }
            }
        },
        Some(other) => return Err(CliError::Usage(format!("--check must be equivariance or orbit, got `{other}`"))),
        None => unreachable!("check always set"),
    }
    Ok(SymmetryRun { map, seed, outcomes })
}

pub fn cmd_symmetry<W: Write>(args: &SymmetryArgs, out: &mut W) -> CliResult<()> {
    let SymmetryRun { map, seed, outcomes } = run_symmetry_checks(args)?;
    writeln!(out, "{} map, m = {}", map.kind, map.m)?;
    writeln!(out, "{:<8} {:<13} {:>12} {:>8}  {:<9} result", "element", "kind", "defect", "samples", "expected")?;
    for o in &outcomes {
        writeln!(
            out,
            "{:<8} {:<13} {:>12.3e} {:>8}  {:<9} {}",
            o.row.element,
            o.row.kind,
            o.row.defect,
            o.row.samples,
            if o.expect_symmetric { "symmetric" } else { "broken" },
            if o.as_expected { "ok" } else { "UNEXPECTED" }
        )?;
    }
    if let Some(path) = &args.out {
        let rows: Vec<ReportRow> = outcomes.iter().map(|o| o.row.clone()).collect();
        let mut file = io::BufWriter::new(fs::File::create(path)?);
        write_report_csv(&mut file, &rows)?;
        file.flush()?;
        let manifest = RunManifest {
            command: "symmetry".into(),
            config: serde_json::json!({ "map": map, "check": args.check, "element": args.element }),
            seed,
            artifacts: vec![csv_artifact(path, rows.len())],
            tool_version: version(),
        };
        write_manifest(&manifest_path(path), &manifest)?;
    }
    if outcomes.iter().all(|o| o.as_expected) {
        Ok(())
    } else {
        Err(CliError::Pattern)
    }
}
