//! Runs every applicable check on one quadric and prints the JSON report
//! the command-line tool writes.

use isoquad::geometry::Metric;
use isoquad::grid::Lattice;
use isoquad::quadrics::{Family, QuadricSpec};
use isoquad::verify::{run_suite, SuiteConfig};

fn main() -> isoquad::Result<()> {
    let spec = QuadricSpec::new(Family::Hyperboloid2Sheet, 1.5, 1.0, 0.8, Metric::MinkowskiZ)?;
    let mut cfg = SuiteConfig::new(spec, Lattice::from_ranges(0.1, 0.5, 16, 0.1, 0.5, 16)?);
    cfg.samples = 300;
    cfg.seed = 7;
    let reports = run_suite(&cfg)?;
    for r in &reports {
        eprintln!("{}", r.summary());
    }
    println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize"));
    Ok(())
}
