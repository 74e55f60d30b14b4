//! Mesh and report serialization.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::SurfaceGrid;

/// Causal code for nodes without a causal type (masked, or no ambient).
pub const CAUSAL_NA: i32 = 9;

/// Wavefront OBJ: one `v` record per valid node in lattice order, one quad
/// `f` record per lattice cell whose four corners are valid. Coordinates
/// carry 17 significant digits so they read back bit-exact.
pub fn obj_string(grid: &SurfaceGrid) -> String {
    let l = grid.lattice;
    let mut index = vec![0usize; l.len()];
    let mut out = String::new();
    let mut next = 1;
    for (k, slot) in index.iter_mut().enumerate() {
        if let Some(j) = &grid.jets[k] {
            let _ = writeln!(out, "v {:.16e} {:.16e} {:.16e}", j.x.x, j.x.y, j.x.z);
            *slot = next;
            next += 1;
        }
    }
    for k in 0..l.nv.saturating_sub(1) {
        for i in 0..l.nu.saturating_sub(1) {
            let corners = [
                index[l.index(i, k)],
                index[l.index(i + 1, k)],
                index[l.index(i + 1, k + 1)],
                index[l.index(i, k + 1)],
            ];
            if corners.iter().all(|&c| c > 0) {
                let _ = writeln!(out, "f {} {} {} {}", corners[0], corners[1], corners[2], corners[3]);
            }
        }
    }
    out
}

/// CSV with header `u,v,x1,x2,x3,causal`, one row per lattice node. Masked
/// nodes keep their row with `NaN` coordinates and causal code 9.
pub fn csv_string(grid: &SurfaceGrid) -> String {
    let l = grid.lattice;
    let mut out = String::from("u,v,x1,x2,x3,causal\n");
    for (i, k) in l.nodes() {
        let idx = l.index(i, k);
        let code = grid.causal[idx].map_or(CAUSAL_NA, |c| c.code());
        let _ = match &grid.jets[idx] {
            Some(j) => writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{code}",
                l.u(i),
                l.v(k),
                j.x.x,
                j.x.y,
                j.x.z
            ),
            None => writeln!(out, "{:.16e},{:.16e},NaN,NaN,NaN,{CAUSAL_NA}", l.u(i), l.v(k)),
        };
    }
    out
}

/// Writes `bytes` to a temporary file beside `path`, then renames it into
/// place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .map_err(|e| Error::Io(format!("cannot write {}: {}", path.display(), e.error)))?;
    Ok(())
}

/// Vertex positions from OBJ text, in file order.
pub fn read_obj_vertices(text: &str) -> Result<Vec<[f64; 3]>> {
    text.lines()
        .filter_map(|l| l.strip_prefix("v "))
        .map(|rest| {
            let c: Vec<f64> = rest
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Io(format!("bad vertex `{rest}`: {e}")))?;
            match c[..] {
                [x, y, z] => Ok([x, y, z]),
                _ => Err(Error::Io(format!("vertex `{rest}` does not have three coordinates"))),
            }
        })
        .collect()
}
