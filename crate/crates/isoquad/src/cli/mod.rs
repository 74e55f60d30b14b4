//! Command-line front end: mesh generation, dual surfaces, check suites and
//! the umbilic census.
//!
//! Exit codes: 0 success, 1 a check failed, 2 configuration error,
//! 3 generation error.

pub mod config;
pub mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::duals::ClosedDual;
use crate::error::Error;
use crate::grid::SurfaceGrid;
use crate::quadrics::{umbilic_branch_values, BranchValue, Scalar};
use crate::verify::{run_suite, CheckReport, SuiteConfig, FD_STEP};

pub use config::{JobConfig, MeshFormat, Shape};

pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_GENERATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "isoquad", version, about = "Isothermic quadrics and their Christoffel duals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the quadric (and with --dual its Christoffel dual) on a grid.
    Gen(JobArgs),
    /// Sample the closed-form Christoffel dual on a grid.
    Dual(JobArgs),
    /// Run the verification suite and write a JSON report.
    Check(JobArgs),
    /// Print the branch values of the parametrizing function.
    BranchValues(JobArgs),
    /// Summarize a JSON report written by `check`.
    Report {
        /// Report file to read.
        path: PathBuf,
    },
}

#[derive(Debug, Default, Clone, Args)]
pub struct JobArgs {
    /// key=value config file; flags override its entries.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// ellipsoid, hyp2 or hyp1.
    #[arg(long)]
    pub family: Option<String>,
    /// Half-axes a,b,c.
    #[arg(long)]
    pub axes: Option<String>,
    /// Moduli p,q,r; imaginary values as `0.5i`.
    #[arg(long)]
    pub moduli: Option<String>,
    /// euclidean, minkowski-z or minkowski-x.
    #[arg(long)]
    pub ambient: Option<String>,
    /// u0:u1:nu,v0:v1:nv
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Option<String>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Random points per pointwise check.
    #[arg(long)]
    pub samples: Option<usize>,
    /// obj or csv.
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comma-separated check names; all applicable checks by default.
    #[arg(long)]
    pub checks: Option<String>,
    /// Pair the quadric with itself instead of its dual; the pair check
    /// must then fail.
    #[arg(long)]
    pub negative_control: bool,
    /// With `gen`, also write the dual next to the primal.
    #[arg(long)]
    pub dual: bool,
}

/// A command outcome: exit code plus the message for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn config(e: impl std::fmt::Display) -> Self {
        let text = e.to_string();
        let text = text.strip_prefix("configuration: ").unwrap_or(&text);
        Failure { code: EXIT_CONFIG, message: format!("config error: {text}") }
    }

    fn generation(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_GENERATION, message: format!("generation error: {e}") }
    }
}

type Outcome = std::result::Result<String, Failure>;

impl JobArgs {
    /// Config file entries overridden by the flags that were given.
    pub fn resolve(&self) -> Result<JobConfig, Failure> {
        let mut kv = match &self.config {
            Some(path) => config::read_config_file(path).map_err(Failure::config)?,
            None => BTreeMap::new(),
        };
        // A shape flag replaces whichever shape the file gave.
        if self.axes.is_some() || self.moduli.is_some() {
            kv.remove("axes");
            kv.remove("moduli");
        }
        let mut set = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                kv.insert(k.to_string(), v);
            }
        };
        set("axes", self.axes.clone());
        set("moduli", self.moduli.clone());
        set("family", self.family.clone());
        set("ambient", self.ambient.clone());
        set("grid", self.grid.clone());
        set("seed", self.seed.map(|s| s.to_string()));
        set("samples", self.samples.map(|s| s.to_string()));
        set("format", self.format.clone());
        set("out", self.out.as_ref().map(|p| p.display().to_string()));
        set("checks", self.checks.clone());
        if self.negative_control {
            set("negative_control", Some("true".into()));
        }
        if self.dual {
            set("dual", Some("true".into()));
        }
        JobConfig::from_pairs(&kv).map_err(Failure::config)
    }
}

fn masked_percent(grid: &SurfaceGrid) -> f64 {
    100.0 * grid.masked_count() as f64 / grid.lattice.len() as f64
}

fn encode(grid: &SurfaceGrid, format: MeshFormat) -> String {
    match format {
        MeshFormat::Obj => output::obj_string(grid),
        MeshFormat::Csv => output::csv_string(grid),
    }
}

/// Writes a grid to `out` (or returns it for stdout) and describes it.
fn emit(grid: &SurfaceGrid, what: &str, format: MeshFormat, out: Option<&PathBuf>, stdout: &mut String) -> Outcome {
    let pct = masked_percent(grid);
    if grid.masked_count() == grid.lattice.len() {
        return Err(Failure::generation(format!("{what}: every node masked ({pct:.1}% masked)")));
    }
    let text = encode(grid, format);
    match out {
        Some(path) => {
            output::write_atomic(path, text.as_bytes())
                .map_err(|e| Failure::generation(format!("{what}: {e} ({pct:.1}% masked)")))?;
            Ok(format!(
                "{what}: wrote {} of {} nodes to {} ({pct:.1}% masked)",
                grid.lattice.len() - grid.masked_count(),
                grid.lattice.len(),
                path.display()
            ))
        }
        None => {
            stdout.push_str(&text);
            Ok(format!("{what}: {pct:.1}% masked"))
        }
    }
}

/// `mesh.obj` becomes `mesh.dual.obj`.
fn dual_path(path: &std::path::Path) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}.dual.{}", ext.to_string_lossy()),
        None => format!("{stem}.dual"),
    };
    path.with_file_name(name)
}

fn dual_grid(cfg: &JobConfig) -> Result<SurfaceGrid, Failure> {
    let q = cfg.quadric().map_err(Failure::config)?;
    Ok(ClosedDual::new(q).grid(cfg.lattice, FD_STEP, 4, Some(cfg.ambient)))
}

/// `gen`: primal grid, plus the dual with `--dual`.
pub fn cmd_gen(cfg: &JobConfig, stdout: &mut String) -> Outcome {
    let q = cfg.quadric().map_err(Failure::config)?;
    let primal = q.grid(cfg.lattice);
    let mut msg = emit(&primal, "primal", cfg.format, cfg.out.as_ref(), stdout)?;
    if cfg.dual {
        let dual = dual_grid(cfg)?;
        let path = cfg.out.as_deref().map(dual_path);
        msg.push('\n');
        msg.push_str(&emit(&dual, "dual", cfg.format, path.as_ref(), stdout)?);
    }
    Ok(msg)
}

/// `dual`: the closed-form Christoffel dual.
pub fn cmd_dual(cfg: &JobConfig, stdout: &mut String) -> Outcome {
    let dual = dual_grid(cfg)?;
    emit(&dual, "dual", cfg.format, cfg.out.as_ref(), stdout)
}

/// `check`: runs the suite; fails with exit code 1 when any check fails.
pub fn cmd_check(cfg: &JobConfig, stdout: &mut String) -> Outcome {
    let q = cfg.quadric().map_err(Failure::config)?;
    let mut suite = SuiteConfig::new(*q.spec(), cfg.lattice);
    suite.seed = cfg.seed;
    suite.samples = cfg.samples;
    suite.checks = cfg.checks.clone();
    suite.negative_control = cfg.negative_control;
    let reports = run_suite(&suite).map_err(|e| match e {
        Error::Config(_) => Failure::config(e),
        other => Failure::generation(other),
    })?;
    let json = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
    let summary = summarize(&reports);
    match &cfg.out {
        Some(path) => output::write_atomic(path, json.as_bytes()).map_err(Failure::generation)?,
        None => stdout.push_str(&json),
    }
    finish(&reports, summary)
}

fn summarize(reports: &[CheckReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(s, "{}", r.summary());
    }
    s
}

fn finish(reports: &[CheckReport], summary: String) -> Outcome {
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.check.as_str()).collect();
    if failed.is_empty() {
        Ok(summary + &format!("all {} checks passed", reports.len()))
    } else {
        Err(Failure {
            code: EXIT_CHECK_FAILED,
            message: summary + &format!("{} of {} checks failed: {}", failed.len(), reports.len(), failed.join(", ")),
        })
    }
}

fn format_branch(b: &BranchValue) -> String {
    match b.value {
        Scalar::Complex(z) => format!("{:+.17e} {:+.17e}i  {:?}", z.re, z.im, b.class),
        Scalar::Lorentz(y) => format!("{:+.17e} {:+.17e}j  {:?}", y.re, y.im, b.class),
    }
}

/// `branch-values`: prints the umbilic census.
pub fn cmd_branch_values(cfg: &JobConfig, stdout: &mut String) -> Outcome {
    let spec = cfg.spec().map_err(Failure::config)?;
    let census = umbilic_branch_values(&spec).map_err(Failure::config)?;
    for b in &census.values {
        let _ = writeln!(stdout, "{}", format_branch(b));
    }
    let excluded = census
        .values
        .iter()
        .filter(|b| b.class == crate::quadrics::BranchClass::Excluded)
        .count();
    let mut msg = format!("{} branch values, {excluded} excluded", census.values.len());
    if census.no_umbilics {
        msg.push_str("; no umbilics");
    }
    Ok(msg)
}

/// `report`: re-reads a JSON report and summarizes it.
pub fn cmd_report(path: &std::path::Path) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::config(format!("cannot read {}: {e}", path.display())))?;
    let reports: Vec<CheckReport> = serde_json::from_str(&text)
        .map_err(|e| Failure::config(format!("{} is not a check report: {e}", path.display())))?;
    finish(&reports, summarize(&reports))
}

/// Runs one parsed command. Returns the exit code, the text for stdout and
/// the text for stderr.
pub fn execute(cli: &Cli) -> (i32, String, String) {
    let mut stdout = String::new();
    let outcome = match &cli.command {
        Command::Report { path } => cmd_report(path),
        Command::Gen(a) | Command::Dual(a) | Command::Check(a) | Command::BranchValues(a) => {
            a.resolve().and_then(|cfg| match &cli.command {
                Command::Gen(_) => cmd_gen(&cfg, &mut stdout),
                Command::Dual(_) => cmd_dual(&cfg, &mut stdout),
                Command::Check(_) => cmd_check(&cfg, &mut stdout),
                _ => cmd_branch_values(&cfg, &mut stdout),
            })
        }
    };
    match outcome {
        Ok(msg) => (0, stdout, msg),
        Err(f) => (f.code, stdout, f.message),
    }
}

/// Parses `args` (including the program name), runs the command and prints
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { 0 };
        }
    };
    let (code, out, err) = execute(&cli);
    print!("{out}");
    if !err.is_empty() {
        eprintln!("{err}");
    }
    code
}
