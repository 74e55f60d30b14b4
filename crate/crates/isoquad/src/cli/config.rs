//! Job configuration: a flat `key=value` file merged with command-line
//! overrides.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::Metric;
use crate::grid::Lattice;
use crate::quadrics::{Family, ModuliTriple, Quadric, QuadricSpec};

/// Keys accepted in a config file. Command-line flags use the same names
/// with `-` in place of `_`.
pub const CONFIG_KEYS: &[&str] = &[
    "family",
    "axes",
    "moduli",
    "ambient",
    "grid",
    "seed",
    "samples",
    "format",
    "out",
    "checks",
    "negative_control",
    "dual",
];

/// Tolerance on `p² + q² = 1` for user-supplied moduli.
const MODULI_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeshFormat {
    Obj,
    Csv,
}

impl std::str::FromStr for MeshFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "obj" => Ok(MeshFormat::Obj),
            "csv" => Ok(MeshFormat::Csv),
            other => Err(Error::Config(format!("unknown format `{other}` (expected obj or csv)"))),
        }
    }
}

/// How the quadric's shape was given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Shape {
    Axes([f64; 3]),
    Moduli { p: Complex64, q: Complex64, r: Complex64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub family: Family,
    pub shape: Shape,
    pub ambient: Metric,
    pub lattice: Lattice,
    pub seed: u64,
    pub samples: usize,
    pub format: MeshFormat,
    pub out: Option<PathBuf>,
    pub checks: Vec<String>,
    pub negative_control: bool,
    pub dual: bool,
}

/// Ambient metric a family lives in when none is given.
pub fn default_ambient(family: Family) -> Metric {
    match family {
        Family::Ellipsoid => Metric::Euclidean,
        Family::Hyperboloid2Sheet => Metric::MinkowskiZ,
        Family::Hyperboloid1Sheet => Metric::MinkowskiX,
    }
}

/// Reads `key=value` lines. Blank lines and lines starting with `#` are
/// skipped; later keys override earlier ones.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key=value, got `{line}`", n + 1)))?;
        let key = k.trim().replace('-', "_");
        if !CONFIG_KEYS.contains(&key.as_str()) {
            return Err(Error::Config(format!("line {}: unknown key `{}`", n + 1, k.trim())));
        }
        out.insert(key, v.trim().to_string());
    }
    Ok(out)
}

pub fn read_config_file(path: &Path) -> Result<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
    parse_config_text(&text)
}

fn parse_f64(key: &str, s: &str) -> Result<f64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Config(format!("{key}: `{s}` is not a number")))
}

fn parse_list<T>(key: &str, s: &str, n: usize, item: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(Error::Config(format!("{key}: expected {n} comma-separated values, got `{s}`")));
    }
    parts.into_iter().map(item).collect()
}

/// A real or purely imaginary number: `0.5`, `0.5i`, `-2i`, `i`.
pub fn parse_modulus(s: &str) -> Result<Complex64> {
    let s = s.trim();
    match s.strip_suffix('i') {
        Some("") => Ok(Complex64::i()),
        Some("-") => Ok(-Complex64::i()),
        Some(im) => Ok(Complex64::new(0.0, parse_f64("moduli", im)?)),
        None => Ok(Complex64::new(parse_f64("moduli", s)?, 0.0)),
    }
}

/// `u0:u1:nu,v0:v1:nv`.
pub fn parse_grid(s: &str) -> Result<Lattice> {
    let axes = parse_list("grid", s, 2, |part| {
        let f: Vec<&str> = part.split(':').collect();
        if f.len() != 3 {
            return Err(Error::Config(format!("grid: expected lo:hi:n, got `{part}`")));
        }
        let n: usize = f[2]
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("grid: `{}` is not a node count", f[2])))?;
        Ok((parse_f64("grid", f[0])?, parse_f64("grid", f[1])?, n))
    })?;
    let ((u0, u1, nu), (v0, v1, nv)) = (axes[0], axes[1]);
    Lattice::from_ranges(u0, u1, nu, v0, v1, nv)
}

fn parse_bool(key: &str, s: &str) -> Result<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Ok(true),
        "0" | "false" | "no" | "off" => Ok(false),
        _ => Err(Error::Config(format!("{key}: `{s}` is not a boolean"))),
    }
}

impl JobConfig {
    /// Builds a config from merged key/value pairs.
    pub fn from_pairs(kv: &BTreeMap<String, String>) -> Result<Self> {
        if let Some(k) = kv.keys().find(|k| !CONFIG_KEYS.contains(&k.as_str())) {
            return Err(Error::Config(format!("unknown key `{k}`")));
        }
        let get = |k: &str| kv.get(k).map(String::as_str);
        let family: Family = get("family")
            .ok_or_else(|| Error::Config("family is required".into()))?
            .parse()?;
        let shape = match (get("axes"), get("moduli")) {
            (Some(a), None) => {
                let v = parse_list("axes", a, 3, |x| parse_f64("axes", x))?;
                Shape::Axes([v[0], v[1], v[2]])
            }
            (None, Some(m)) => {
                let v = parse_list("moduli", m, 3, parse_modulus)?;
                Shape::Moduli { p: v[0], q: v[1], r: v[2] }
            }
            (Some(_), Some(_)) => return Err(Error::Config("give either axes or moduli, not both".into())),
            (None, None) => return Err(Error::Config("one of axes or moduli is required".into())),
        };
        let ambient = match get("ambient") {
            Some(s) => s.parse()?,
            None => default_ambient(family),
        };
        let lattice = parse_grid(get("grid").unwrap_or("0.2:1.0:32,0.2:1.0:32"))?;
        let seed = match get("seed") {
            Some(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("seed: `{s}` is not an unsigned integer")))?,
            None => 0,
        };
        let samples = match get("samples") {
            Some(s) => match s.trim().parse() {
                Ok(n) if n > 0 => n,
                _ => return Err(Error::Config(format!("samples: `{s}` is not a positive integer"))),
            },
            None => 1000,
        };
        let checks = get("checks")
            .map(|s| {
                s.split(',')
                    .map(str::trim)
                    .filter(|c| !c.is_empty())
                    .map(String::from)
                    .collect()
            })
            .unwrap_or_default();
        Ok(JobConfig {
            family,
            shape,
            ambient,
            lattice,
            seed,
            samples,
            format: get("format").unwrap_or("obj").parse()?,
            out: get("out").map(PathBuf::from),
            checks,
            negative_control: get("negative_control").map_or(Ok(false), |s| parse_bool("negative_control", s))?,
            dual: get("dual").map_or(Ok(false), |s| parse_bool("dual", s))?,
        })
    }

    /// The quadric's spec. Unlike [`Self::quadric`] this does not need the
    /// moduli, so it also accepts axes like `a = c`.
    pub fn spec(&self) -> Result<QuadricSpec> {
        match self.shape {
            Shape::Axes([a, b, c]) => QuadricSpec::new(self.family, a, b, c, self.ambient)
                .map_err(|e| Error::Config(e.to_string())),
            Shape::Moduli { .. } => Ok(*self.quadric()?.spec()),
        }
    }

    /// The quadric described by the config. Any failure here is a
    /// configuration problem.
    pub fn quadric(&self) -> Result<Quadric> {
        let built = match self.shape {
            Shape::Axes([a, b, c]) => {
                QuadricSpec::new(self.family, a, b, c, self.ambient).and_then(Quadric::new)
            }
            Shape::Moduli { p, q, r } => {
                let defect = (p * p + q * q - 1.0).norm();
                if defect > MODULI_TOL {
                    return Err(Error::Config(format!(
                        "moduli p = {p}, q = {q} violate p² + q² = 1 (defect {defect:e})"
                    )));
                }
                ModuliTriple::new(p, r, self.family, self.ambient).and_then(|m| Quadric::from_moduli(&m))
            }
        };
        built.map_err(|e| match e {
            Error::Config(_) => e,
            other => Error::Config(other.to_string()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(text: &str) -> BTreeMap<String, String> {
        parse_config_text(text).unwrap()
    }

    #[test]
    fn file_then_override() {
        let mut kv = pairs("# ellipsoid job\nfamily = ellipsoid\naxes=1.5,1,0.7\ngrid=0:1:4,0:2:5\n");
        kv.insert("seed".into(), "7".into());
        let cfg = JobConfig::from_pairs(&kv).unwrap();
        assert_eq!(cfg.family, Family::Ellipsoid);
        assert_eq!(cfg.ambient, Metric::Euclidean);
        assert_eq!(cfg.seed, 7);
        assert_eq!((cfg.lattice.nu, cfg.lattice.nv), (4, 5));
        assert_eq!(cfg.format, MeshFormat::Obj);
    }

    #[test]
    fn axes_and_moduli_are_exclusive() {
        let kv = pairs("family=hyp2\naxes=1,1,1\nmoduli=0.5,0.5,1");
        assert!(matches!(JobConfig::from_pairs(&kv), Err(Error::Config(_))));
        let kv = pairs("family=hyp2");
        assert!(matches!(JobConfig::from_pairs(&kv), Err(Error::Config(_))));
    }

    #[test]
    fn imaginary_moduli() {
        assert_eq!(parse_modulus("0.5i").unwrap(), Complex64::new(0.0, 0.5));
        assert_eq!(parse_modulus("-i").unwrap(), Complex64::new(0.0, -1.0));
        assert!(parse_modulus("x").is_err());
        let kv = pairs("family=hyp1\nmoduli=0.6i,1.1661903789690602,0.8");
        let cfg = JobConfig::from_pairs(&kv).unwrap();
        assert!(cfg.quadric().is_ok());
        let kv = pairs("family=hyp1\nmoduli=0.6i,1.2,1.2");
        assert!(JobConfig::from_pairs(&kv).unwrap().quadric().is_err());
    }

    #[test]
    fn bad_lines() {
        assert!(parse_config_text("family").is_err());
        assert!(parse_config_text("colour=red").is_err());
        assert!(parse_grid("0:1:1,0:1:4").is_err());
        assert!(parse_grid("0:1:4").is_err());
    }
}
