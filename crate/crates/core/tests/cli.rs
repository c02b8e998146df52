use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn symfrac(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symfrac")).current_dir(dir).args(args).output().expect("binary runs")
}

const DIHEDRAL: [&str; 10] = ["--map", "dihedral", "--m", "3", "--a", "-1.804", "--b", "1", "--d", "0.5"];
const CYCLIC: [&str; 12] = ["--map", "cyclic", "--m", "4", "--a", "-1.86", "--b", "2.1", "--c", "0.1", "--d", "-1"];

fn with<'a>(base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    base.iter().chain(extra).copied().collect()
}

fn manifest(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn data_rows(path: &Path) -> usize {
    fs::read_to_string(path).unwrap().lines().filter(|l| !l.starts_with('#')).count() - 1
}

fn assert_manifest_complete(dir: &Path, m: &serde_json::Value) {
    for a in m["artifacts"].as_array().unwrap() {
        let path = dir.join(a["path"].as_str().unwrap());
        assert!(path.exists(), "{} missing", path.display());
        if let Some(rows) = a["rows"].as_u64() {
            assert_eq!(data_rows(&path), rows as usize, "{}", path.display());
        }
    }
}

#[test]
fn simulate_io_writes_orbit_plot_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let args = with(&[&["simulate"][..], &DIHEDRAL].concat(), &["--x0", "0.05", "--y0", "0.1", "--steps", "5000", "--plot", "o.png", "--out", "o.csv"]);
    let out = symfrac(dir.path(), &args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let csv = fs::read_to_string(dir.path().join("o.csv")).unwrap();
    assert!(csv.starts_with("n,x,y\n0,0.05,0.1\n"));
    let m = manifest(&dir.path().join("o.manifest.json"));
    assert_eq!(m["command"], "simulate");
    assert_eq!(m["config"]["map"]["a"], -1.804);
    assert_eq!(m["config"]["steps"], 5000);
    assert_eq!(m["artifacts"].as_array().unwrap().len(), 2);
    assert_eq!(m["artifacts"][0]["rows"], 5001);
    assert_manifest_complete(dir.path(), &m);
}

#[test]
fn simulate_reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.csv", "b.csv"] {
        let args = with(&[&["simulate"][..], &DIHEDRAL].concat(), &["--order", "fo", "--q", "0.03", "--x0", "0.05", "--y0", "0.1", "--steps", "1500", "--out", name]);
        assert_eq!(symfrac(dir.path(), &args).status.code(), Some(0));
    }
    let a = fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("b.csv")).unwrap());
    assert!(a.starts_with(b"# q=0.03\nn,x,y\n"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("run.conf"), "# orbit\nkind = dihedral\nm = 3\na = -1.0\nb = 1\nd = 0.5\nx0 = 0.05\ny0 = 0.1\nsteps = 3000\n").unwrap();
    let out = symfrac(dir.path(), &["simulate", "--config", "run.conf", "--a", "-1.804", "--out", "c.csv"]);
    assert_eq!(out.status.code(), Some(0));
    let m = manifest(&dir.path().join("c.manifest.json"));
    assert_eq!(m["config"]["map"]["a"], -1.804);
    assert_eq!(m["config"]["steps"], 3000);

    fs::write(dir.path().join("bad.conf"), "kind = dihedral\nm = 3\nbogus = 1\n").unwrap();
    assert_eq!(symfrac(dir.path(), &["simulate", "--config", "bad.conf"]).status.code(), Some(2));
}

#[test]
fn invalid_flags_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["simulate", "--map", "bogus", "--m", "3"],
        vec!["simulate", "--map", "dihedral", "--m", "3", "--order", "fo"],
        vec!["simulate", "--map", "dihedral", "--m", "3", "--order", "fo", "--q", "1.5"],
        vec!["simulate", "--map", "dihedral", "--m", "3", "--steps", "10", "--discard", "20"],
        vec!["simulate", "--no-such-flag"],
        vec!["bifurcation", "--map", "dihedral", "--m", "3", "--axis", "b", "--min", "0", "--max", "1"],
        vec!["bifurcation", "--map", "dihedral", "--m", "3", "--axis", "q", "--min", "0.5", "--max", "0.1"],
        vec!["symmetry", "--map", "dihedral", "--m", "3", "--element", "T1"],
        vec!["symmetry", "--map", "dihedral", "--m", "3", "--check", "shape"],
        vec!["frobnicate"],
    ] {
        assert_eq!(symfrac(dir.path(), &args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(symfrac(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn early_divergence_exits_3_without_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let out = symfrac(dir.path(), &["simulate", "--map", "dihedral", "--m", "3", "--a", "3", "--b", "1", "--x0", "1", "--y0", "1", "--out", "d.csv"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!dir.path().join("d.manifest.json").exists());

    // escaping after the transient is reported but not an error
    let late = symfrac(dir.path(), &["simulate", "--map", "dihedral", "--m", "3", "--a", "3", "--b", "1", "--x0", "1", "--y0", "1", "--discard", "0", "--steps", "50", "--out", "e.csv"]);
    assert_eq!(late.status.code(), Some(0));
}

#[test]
fn symmetry_patterns() {
    let dir = tempfile::tempdir().unwrap();
    let run = |args: Vec<&str>| symfrac(dir.path(), &args);

    let out = run(with(&[&["symmetry"][..], &DIHEDRAL].concat(), &["--check", "equivariance", "--out", "eq.csv"]));
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(dir.path().join("eq.csv")).unwrap();
    assert!(csv.starts_with("element,kind,defect,samples\n"));
    assert_eq!(csv.lines().count(), 7);
    assert_manifest_complete(dir.path(), &manifest(&dir.path().join("eq.manifest.json")));

    let out = run(with(&[&["symmetry"][..], &CYCLIC].concat(), &["--check", "equivariance"]));
    assert_eq!(out.status.code(), Some(0));
    let table = String::from_utf8(out.stdout).unwrap();
    assert_eq!(table.matches("broken").count(), 4);

    let out = run(with(&[&["symmetry"][..], &CYCLIC].concat(), &["--check", "orbit", "--steps", "100000"]));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    // initial value on the mirror line of S0 keeps that symmetry
    let out = run(with(&[&["symmetry"][..], &DIHEDRAL].concat(), &["--check", "orbit", "--order", "fo", "--q", "0.03", "--element", "S0", "--x0", "0.3", "--y0", "0"]));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("symmetric ok"));

    let out = run(with(&[&["symmetry"][..], &DIHEDRAL].concat(), &["--check", "orbit", "--order", "fo", "--q", "0.03", "--element", "S0", "--y0", "0.1"]));
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("broken    ok"));
}

#[test]
fn unexpected_pattern_exits_4() {
    // c this small breaks the reflections by less than the failure threshold
    let dir = tempfile::tempdir().unwrap();
    let out = symfrac(dir.path(), &["symmetry", "--map", "cyclic", "--m", "4", "--a", "-1.86", "--b", "2.1", "--c", "1e-9", "--d", "-1"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("UNEXPECTED").count(), 4);
}

#[test]
fn bifurcation_outputs_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let base = with(
        &["bifurcation", "--map", "dihedral", "--m", "3", "--a", "-1.755", "--b", "1", "--d", "0.5"],
        &["--axis", "x0", "--min", "-1.5", "--max", "1.5", "--steps-axis", "20", "--randomize-y0", "--seed", "42", "--steps", "400", "--discard", "300"],
    );
    for prefix in ["r1", "r2"] {
        let args = with(&base, &["--out-prefix", prefix]);
        let out = symfrac(dir.path(), &args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = fs::read(dir.path().join("r1_ic0.csv")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("r2_ic0.csv")).unwrap());
    assert!(a.starts_with(b"axis_value,ic_index,x\n"));

    let m = manifest(&dir.path().join("r1.manifest.json"));
    assert_eq!(m["seed"], 42);
    assert_eq!(m["config"]["randomize_y0"], true);
    assert_manifest_complete(dir.path(), &m);
    assert!(dir.path().join("r1.png").exists());

    let out = symfrac(
        dir.path(),
        &with(&[&["bifurcation"][..], &DIHEDRAL].concat(), &["--axis", "q", "--min", "0.1", "--max", "0.9", "--steps-axis", "4", "--steps", "300", "--discard", "200", "--ic", "0.5,0.0001", "--ic", "-0.1,-0.1", "--out-prefix", "q"]),
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let m = manifest(&dir.path().join("q.manifest.json"));
    assert_eq!(m["artifacts"].as_array().unwrap().len(), 3);
    assert_manifest_complete(dir.path(), &m);
}
