//! Rectangular parameter lattices and sampled surfaces.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{causal_type, CausalType, Metric, SurfaceJet, Vec3};

/// Denominator magnitude below which a grid node is masked.
pub const GRID_MASK_TOL: f64 = 1e-6;

/// An `nu × nv` lattice `u_i = u0 + i du`, `v_k = v0 + k dv`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Lattice {
    pub u0: f64,
    pub v0: f64,
    pub du: f64,
    pub dv: f64,
    pub nu: usize,
    pub nv: usize,
}

impl Lattice {
    /// Lattice with `nu` nodes on `[u0, u1]` and `nv` nodes on `[v0, v1]`.
    pub fn from_ranges(u0: f64, u1: f64, nu: usize, v0: f64, v1: f64, nv: usize) -> Result<Self> {
        if nu < 2 || nv < 2 {
            return Err(Error::Config(format!("grid resolution {nu}x{nv} is below 2x2")));
        }
        if !(u1 > u0) || !(v1 > v0) {
            return Err(Error::Config(format!(
                "grid ranges must be increasing: [{u0}, {u1}] x [{v0}, {v1}]"
            )));
        }
        Ok(Lattice {
            u0,
            v0,
            du: (u1 - u0) / (nu - 1) as f64,
            dv: (v1 - v0) / (nv - 1) as f64,
            nu,
            nv,
        })
    }

    pub fn u(&self, i: usize) -> f64 {
        self.u0 + i as f64 * self.du
    }

    pub fn v(&self, k: usize) -> f64 {
        self.v0 + k as f64 * self.dv
    }

    pub fn len(&self) -> usize {
        self.nu * self.nv
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major index, `u` fastest.
    pub fn index(&self, i: usize, k: usize) -> usize {
        k * self.nu + i
    }

    /// The lattice with every step halved over the same ranges.
    pub fn refined(&self) -> Lattice {
        Lattice {
            du: self.du / 2.0,
            dv: self.dv / 2.0,
            nu: 2 * self.nu - 1,
            nv: 2 * self.nv - 1,
            ..*self
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.nv).flat_map(move |k| (0..self.nu).map(move |i| (i, k)))
    }
}

/// Why a node carries no jet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum NodeMask {
    Valid,
    /// Too close to a pole or a null divisor of the formula.
    Pole,
    /// The parameter net is singular here (`x_u ∧ x_v ≈ 0`).
    Degenerate,
}

/// A sampled surface: one jet per valid lattice node.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceGrid {
    pub lattice: Lattice,
    pub jets: Vec<Option<SurfaceJet>>,
    pub mask: Vec<NodeMask>,
    /// Causal type per node; `None` for masked nodes or when no ambient
    /// metric was given.
    pub causal: Vec<Option<CausalType>>,
}

impl SurfaceGrid {
    /// Samples `jet` at every node in parallel. Nodes where `jet` fails, or
    /// where `guard` (a formula denominator) drops below [`GRID_MASK_TOL`],
    /// are masked.
    pub fn sample<F, G>(lattice: Lattice, ambient: Option<Metric>, jet: F, guard: G) -> SurfaceGrid
    where
        F: Fn(f64, f64) -> Result<SurfaceJet> + Sync,
        G: Fn(f64, f64) -> Result<f64> + Sync,
    {
        let nodes: Vec<(usize, usize)> = lattice.nodes().collect();
        let samples: Vec<(Option<SurfaceJet>, NodeMask)> = nodes
            .par_iter()
            .map(|&(i, k)| {
                let (u, v) = (lattice.u(i), lattice.v(k));
                match guard(u, v) {
                    Ok(d) if d >= GRID_MASK_TOL => {}
                    _ => return (None, NodeMask::Pole),
                }
                match jet(u, v) {
                    Ok(j) if j.is_finite() => {
                        let area = j.x_u.cross(&j.x_v).norm();
                        let scale = j.x_u.norm_squared() + j.x_v.norm_squared();
                        if area <= 1e-10 * scale || scale == 0.0 {
                            (None, NodeMask::Degenerate)
                        } else {
                            (Some(j), NodeMask::Valid)
                        }
                    }
                    _ => (None, NodeMask::Pole),
                }
            })
            .collect();
        let causal = samples
            .iter()
            .map(|(j, _)| match (j, ambient) {
                (Some(j), Some(m)) => Some(causal_type(j, m)),
                _ => None,
            })
            .collect();
        let (jets, mask) = samples.into_iter().unzip();
        SurfaceGrid {
            lattice,
            jets,
            mask,
            causal,
        }
    }

    pub fn get(&self, i: usize, k: usize) -> Option<&SurfaceJet> {
        self.jets[self.lattice.index(i, k)].as_ref()
    }

    pub fn masked_count(&self) -> usize {
        self.mask.iter().filter(|m| **m != NodeMask::Valid).count()
    }

    pub fn valid_jets(&self) -> impl Iterator<Item = &SurfaceJet> {
        self.jets.iter().flatten()
    }

    /// Shifts periodic components by whole periods so that neighbouring
    /// valid nodes differ by less than half a period: first along the first
    /// valid column, then outward along every row.
    pub fn unwrap_periods(&mut self, periods: [f64; 3]) {
        let l = self.lattice;
        let mut anchor: Option<Vec3> = None;
        let mut row_start: Vec<Option<usize>> = vec![None; l.nv];
        // Seed each row at its first valid node, chained along v.
        for (k, slot) in row_start.iter_mut().enumerate() {
            if let Some(i) = (0..l.nu).find(|&i| self.get(i, k).is_some()) {
                let idx = l.index(i, k);
                if let Some(prev) = anchor {
                    shift_toward(self.jets[idx].as_mut().unwrap(), &prev, periods);
                }
                anchor = Some(self.jets[idx].unwrap().x);
                *slot = Some(i);
            }
        }
        for (k, start) in row_start.into_iter().enumerate() {
            let Some(start) = start else { continue };
            let mut prev = self.get(start, k).unwrap().x;
            for i in start + 1..l.nu {
                let idx = l.index(i, k);
                if let Some(j) = self.jets[idx].as_mut() {
                    shift_toward(j, &prev, periods);
                    prev = j.x;
                }
            }
        }
    }
}

/// Moves each periodic component of `jet.x` to the branch nearest `target`.
pub fn shift_toward(jet: &mut SurfaceJet, target: &Vec3, periods: [f64; 3]) {
    for (c, period) in periods.iter().enumerate() {
        if *period > 0.0 {
            let n = ((target[c] - jet.x[c]) / period).round();
            jet.x[c] += n * period;
        }
    }
}
