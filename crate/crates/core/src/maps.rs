//! The polynomial map family
//!
//! ```text
//! f(z) = (a + b·z·z̄ + c·i + γ·Re(zⁿ))·z + d·z̄^(m-1)
//! ```
//!
//! in three flavours: [`MapKind::Dihedral`] (`c = γ = 0`, equivariant under
//! `D_m`), [`MapKind::Cyclic`] (`c ≠ 0`, equivariant under `C_m` only) and
//! [`MapKind::DihedralRe`] (`γ ≠ 0`, the degree-`n+1` dihedral variant).
//!
//! [`MapSpec::eval`] works in complex arithmetic. [`CartesianForm`] expands the
//! same map into real polynomials `f₁(x, y)`, `f₂(x, y)` via binomial
//! expansion, so the two routes can be checked against each other.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::group::ComplexPoint;
use crate::kv::KvBlock;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapKind {
    Dihedral,
    Cyclic,
    DihedralRe,
}

impl MapKind {
    pub fn name(self) -> &'static str {
        match self {
            MapKind::Dihedral => "dihedral",
            MapKind::Cyclic => "cyclic",
            MapKind::DihedralRe => "dihedral-re",
        }
    }

    /// Whether the reflections of `D_m` commute with maps of this kind.
    pub fn has_reflection_symmetry(self) -> bool {
        !matches!(self, MapKind::Cyclic)
    }
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MapKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "dihedral" => Ok(MapKind::Dihedral),
            "cyclic" => Ok(MapKind::Cyclic),
            "dihedral-re" | "dihedral_re" | "dihedralre" => Ok(MapKind::DihedralRe),
            other => invalid(format!("unknown map kind `{other}`")),
        }
    }
}

/// A fully parameterised member of the map family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapSpec {
    pub kind: MapKind,
    pub m: u32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub gamma: f64,
    pub n_power: u32,
}

pub const CONFIG_KEYS: [&str; 8] = ["kind", "m", "a", "b", "c", "d", "gamma", "n_power"];

impl MapSpec {
    pub fn dihedral(m: u32, a: f64, b: f64, d: f64) -> Result<Self> {
        Self { kind: MapKind::Dihedral, m, a, b, c: 0.0, d, gamma: 0.0, n_power: 0 }.validated()
    }

    pub fn cyclic(m: u32, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self { kind: MapKind::Cyclic, m, a, b, c, d, gamma: 0.0, n_power: 0 }.validated()
    }

    pub fn dihedral_re(m: u32, a: f64, b: f64, gamma: f64, d: f64, n_power: u32) -> Result<Self> {
        Self { kind: MapKind::DihedralRe, m, a, b, c: 0.0, d, gamma, n_power }.validated()
    }

    /// The `D_3` map with `a = -1.804`, `b = 1`, `d = 0.5`.
    pub fn preset_dihedral() -> Self {
        Self::dihedral(3, -1.804, 1.0, 0.5).expect("valid preset")
    }

    /// The `C_4` map with `a = -1.86`, `b = 2.1`, `c = 0.1`, `d = -1`.
    pub fn preset_cyclic() -> Self {
        Self::cyclic(4, -1.86, 2.1, 0.1, -1.0).expect("valid preset")
    }

    /// The `D_6` map with `a = -2.584`, `b = 5`, `gamma = -2`, `d = -1`, `n = 6`.
    pub fn preset_dihedral_re() -> Self {
        Self::dihedral_re(6, -2.584, 5.0, -2.0, -1.0, 6).expect("valid preset")
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return invalid(format!("m must be at least 2, got {}", self.m));
        }
        let coeffs = [self.a, self.b, self.c, self.d, self.gamma];
        if coeffs.iter().any(|v| !v.is_finite()) {
            return invalid("map coefficients must be finite");
        }
        match self.kind {
            MapKind::Dihedral => {
                if self.c != 0.0 || self.gamma != 0.0 {
                    return invalid("dihedral maps require c = 0 and gamma = 0");
                }
            }
            MapKind::Cyclic => {
                if self.c == 0.0 {
                    return invalid("cyclic maps require c != 0");
                }
                if self.gamma != 0.0 {
                    return invalid("cyclic maps require gamma = 0");
                }
            }
            MapKind::DihedralRe => {
                if self.c != 0.0 {
                    return invalid("dihedral-re maps require c = 0");
                }
                if self.gamma == 0.0 {
                    return invalid("dihedral-re maps require gamma != 0");
                }
                if self.n_power < 1 {
                    return invalid("dihedral-re maps require n_power >= 1");
                }
            }
        }
        Ok(())
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Same map with coefficient `a` replaced.
    pub fn with_a(self, a: f64) -> Self {
        Self { a, ..self }
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let zc = z.conj();
        let mut coeff = Complex64::new(self.a + self.b * z.norm_sqr(), self.c);
        if self.kind == MapKind::DihedralRe {
            let zn = z.powu(self.n_power);
            coeff.re += self.gamma * (zn + zn.conj()).re / 2.0;
        }
        coeff * z + self.d * zc.powu(self.m - 1)
    }

    pub fn eval(&self, z: ComplexPoint) -> ComplexPoint {
        self.eval_complex(z.into()).into()
    }

    /// Expanded real-polynomial form of this map.
    pub fn cartesian(&self) -> CartesianForm {
        CartesianForm::from_spec(self)
    }

    pub fn eval_cartesian(&self, x: f64, y: f64) -> (f64, f64) {
        self.cartesian().eval(x, y)
    }

    pub fn to_kv(&self) -> KvBlock {
        let mut kv = KvBlock::default();
        kv.insert("kind", self.kind);
        kv.insert("m", self.m);
        kv.insert("a", self.a);
        kv.insert("b", self.b);
        kv.insert("c", self.c);
        kv.insert("d", self.d);
        kv.insert("gamma", self.gamma);
        kv.insert("n_power", self.n_power);
        kv
    }

    pub fn to_config_string(&self) -> String {
        format!(
            "kind = {}\nm = {}\na = {}\nb = {}\nc = {}\nd = {}\ngamma = {}\nn_power = {}\n",
            self.kind, self.m, self.a, self.b, self.c, self.d, self.gamma, self.n_power
        )
    }

    /// Builds a spec from a key-value block. Missing coefficients default to
    /// zero; `n_power` defaults to `m` for `dihedral-re`.
    pub fn from_kv(kv: &KvBlock) -> Result<Self> {
        let kind: MapKind = kv
            .get_str("kind")
            .ok_or_else(|| Error::InvalidArgument("missing `kind`".into()))?
            .parse()?;
        let m: u32 = kv.get("m")?.ok_or_else(|| Error::InvalidArgument("missing `m`".into()))?;
        let f = |key: &str| -> Result<f64> { Ok(kv.get(key)?.unwrap_or(0.0)) };
        let default_n = if kind == MapKind::DihedralRe { m } else { 0 };
        Self {
            kind,
            m,
            a: f("a")?,
            b: f("b")?,
            c: f("c")?,
            d: f("d")?,
            gamma: f("gamma")?,
            n_power: kv.get("n_power")?.unwrap_or(default_n),
        }
        .validated()
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        let kv = KvBlock::parse(text)?;
        kv.check_keys(&CONFIG_KEYS)?;
        Self::from_kv(&kv)
    }
}

/// A real polynomial in `(x, y)`, stored as `(i, j) → coefficient of xⁱyʲ`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), f64>,
}

impl Poly2 {
    pub fn add_term(&mut self, coeff: f64, px: u32, py: u32) {
        if coeff == 0.0 {
            return;
        }
        let entry = self.terms.entry((px, py)).or_insert(0.0);
        *entry += coeff;
        if *entry == 0.0 {
            self.terms.remove(&(px, py));
        }
    }

    pub fn coeff(&self, px: u32, py: u32) -> f64 {
        self.terms.get(&(px, py)).copied().unwrap_or(0.0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, f64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|(&(i, j), &c)| c * x.powi(i as i32) * y.powi(j as i32)).sum()
    }

    fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for (&(i1, j1), &c1) in &self.terms {
            for (&(i2, j2), &c2) in &other.terms {
                out.add_term(c1 * c2, i1 + i2, j1 + j2);
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &Poly2, s: f64) {
        for (&(i, j), &c) in &other.terms {
            self.add_term(s * c, i, j);
        }
    }

    fn monomial(c: f64, px: u32, py: u32) -> Poly2 {
        let mut p = Poly2::default();
        p.add_term(c, px, py);
        p
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), &c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(if c < 0.0 { " - " } else { " + " })?;
            } else if c < 0.0 {
                f.write_str("-")?;
            }
            write!(f, "{}", c.abs())?;
            for (var, p) in [("x", i), ("y", j)] {
                match p {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// `(Re wᵖ, Im wᵖ)` for `w = x + s·iy`, `s = ±1`, expanded binomially.
fn power_parts(p: u32, s: f64) -> (Poly2, Poly2) {
    let mut re = Poly2::default();
    let mut im = Poly2::default();
    for k in 0..=p {
        // (s·i)^k = s^k · i^k, and i^k cycles 1, i, -1, -i
        let c = binomial(p, k) * s.powi(k as i32);
        match k % 4 {
            0 => re.add_term(c, p - k, k),
            1 => im.add_term(c, p - k, k),
            2 => re.add_term(-c, p - k, k),
            _ => im.add_term(-c, p - k, k),
        }
    }
    (re, im)
}

/// The map written as two real polynomials.
#[derive(Debug, Clone, PartialEq)]
pub struct CartesianForm {
    pub f1: Poly2,
    pub f2: Poly2,
}

impl CartesianForm {
    pub fn from_spec(spec: &MapSpec) -> Self {
        // scalar factor s(x, y) = a + b(x² + y²) + γ·Re(zⁿ); f = (s + ci)(x + iy) + d·z̄^(m-1)
        let mut scalar = Poly2::monomial(spec.a, 0, 0);
        scalar.add_term(spec.b, 2, 0);
        scalar.add_term(spec.b, 0, 2);
        if spec.kind == MapKind::DihedralRe {
            let (re_zn, _) = power_parts(spec.n_power, 1.0);
            scalar.add_scaled(&re_zn, spec.gamma);
        }
        let x = Poly2::monomial(1.0, 1, 0);
        let y = Poly2::monomial(1.0, 0, 1);
        let (re_conj, im_conj) = power_parts(spec.m - 1, -1.0);

        let mut f1 = scalar.mul(&x);
        f1.add_scaled(&y, -spec.c);
        f1.add_scaled(&re_conj, spec.d);

        let mut f2 = scalar.mul(&y);
        f2.add_scaled(&x, spec.c);
        f2.add_scaled(&im_conj, spec.d);
        Self { f1, f2 }
    }

    pub fn eval(&self, x: f64, y: f64) -> (f64, f64) {
        (self.f1.eval(x, y), self.f2.eval(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_hand_value() {
        let f = MapSpec::preset_dihedral().eval(ComplexPoint::new(1.0, 0.0));
        assert!((f.x - (-0.304)).abs() < 1e-14);
        assert_eq!(f.y, 0.0);
    }

    #[test]
    fn cyclic_matches_printed_rows_at_unit() {
        let f = MapSpec::preset_cyclic().eval(ComplexPoint::new(1.0, 0.0));
        assert!((f.x - (-0.76)).abs() < 1e-14, "{f:?}");
        assert!((f.y - 0.1).abs() < 1e-14, "{f:?}");
    }

    #[test]
    fn origin_is_fixed() {
        for spec in [MapSpec::preset_dihedral(), MapSpec::preset_cyclic(), MapSpec::preset_dihedral_re()] {
            assert_eq!(spec.eval(ComplexPoint::ORIGIN), ComplexPoint::ORIGIN);
            assert_eq!(spec.eval_cartesian(0.0, 0.0), (0.0, 0.0));
        }
    }

    #[test]
    fn cartesian_hand_value() {
        let (_, f2) = MapSpec::preset_dihedral().eval_cartesian(0.1, 0.2);
        // -0.3608 + 0.002 + 0.008 - 0.02
        assert!((f2 - (-0.3708)).abs() < 1e-14, "{f2}");
    }

    #[test]
    fn expansion_reproduces_printed_dihedral_coefficients() {
        let cf = MapSpec::preset_dihedral().cartesian();
        // -1.804x + x³ + xy² + 0.5x² - 0.5y²
        assert_eq!(cf.f1.coeff(1, 0), -1.804);
        assert_eq!(cf.f1.coeff(3, 0), 1.0);
        assert_eq!(cf.f1.coeff(1, 2), 1.0);
        assert_eq!(cf.f1.coeff(2, 0), 0.5);
        assert_eq!(cf.f1.coeff(0, 2), -0.5);
        assert_eq!(cf.f1.terms().count(), 5);
        // -1.804y + yx² + y³ - xy
        assert_eq!(cf.f2.coeff(0, 1), -1.804);
        assert_eq!(cf.f2.coeff(2, 1), 1.0);
        assert_eq!(cf.f2.coeff(0, 3), 1.0);
        assert_eq!(cf.f2.coeff(1, 1), -1.0);
        assert_eq!(cf.f2.terms().count(), 4);
    }

    #[test]
    fn expansion_reproduces_printed_re_coefficients() {
        let cf = MapSpec::preset_dihedral_re().cartesian();
        let f1 = [(-2.584, 1, 0), (5.0, 3, 0), (5.0, 1, 2), (-2.0, 7, 0), (30.0, 5, 2), (-30.0, 3, 4), (2.0, 1, 6),
            (-1.0, 5, 0), (10.0, 3, 2), (-5.0, 1, 4)];
        for (c, i, j) in f1 {
            assert!((cf.f1.coeff(i, j) - c).abs() < 1e-12, "x^{i}y^{j}: {} vs {c}", cf.f1.coeff(i, j));
        }
        assert_eq!(cf.f1.terms().count(), f1.len());
        let f2 = [(2.0, 0, 7), (30.0, 4, 3), (-2.0, 6, 1), (5.0, 2, 1), (5.0, 0, 3), (-10.0, 2, 3), (1.0, 0, 5),
            (5.0, 4, 1), (-2.584, 0, 1), (-30.0, 2, 5)];
        for (c, i, j) in f2 {
            assert!((cf.f2.coeff(i, j) - c).abs() < 1e-12, "x^{i}y^{j}: {} vs {c}", cf.f2.coeff(i, j));
        }
        assert_eq!(cf.f2.terms().count(), f2.len());
        assert_eq!(cf.f1.degree(), 7);
    }

    #[test]
    fn validation_rules() {
        assert!(MapSpec::dihedral(1, 0.5, 0.0, 0.0).is_err());
        assert!(MapSpec::cyclic(4, -1.0, 1.0, 0.0, 1.0).is_err());
        assert!(MapSpec::dihedral_re(6, -1.0, 1.0, 0.0, 1.0, 6).is_err());
        assert!(MapSpec::dihedral(3, f64::NAN, 1.0, 0.5).is_err());
        let bad = MapSpec { c: 0.3, ..MapSpec::preset_dihedral() };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn config_block_round_trip() {
        for spec in [MapSpec::preset_dihedral(), MapSpec::preset_cyclic(), MapSpec::preset_dihedral_re()] {
            let text = spec.to_config_string();
            assert_eq!(MapSpec::from_config_str(&text).unwrap(), spec);
        }
        let spec = MapSpec::from_config_str("kind = dihedral-re\nm = 6\na=-2.584\nb=5\ngamma=-2\nd=-1").unwrap();
        assert_eq!(spec, MapSpec::preset_dihedral_re());
        assert!(MapSpec::from_config_str("kind = dihedral\nm = 3\nzeta = 1").is_err());
        assert!(MapSpec::from_config_str("kind = spiral\nm = 3").is_err());
    }

    #[test]
    fn kind_names_parse_back() {
        for k in [MapKind::Dihedral, MapKind::Cyclic, MapKind::DihedralRe] {
            assert_eq!(k.name().parse::<MapKind>().unwrap(), k);
        }
    }
}
