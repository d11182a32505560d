//! Exact exponential-time solvers. They serve as base cases of the schemes and
//! as ground truth when certifying approximation ratios.
//!
//! Every solver refuses instances above its configured cap with
//! [`Error::CapExceeded`](crate::Error::CapExceeded) rather than truncating.

mod csp;
mod dominating;
mod grundy;
mod held_karp;
mod induced;
mod mis;
mod set_cover;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

pub use csp::csp_min_unsat;
pub use dominating::{max_minimal_vc_exact, min_ids_exact};
pub use grundy::{grundy_exact, GrundyWitness};
pub use held_karp::{held_karp, Tour};
pub use induced::{max_induced_exact, InducedKind};
pub use mis::max_independent_set_exact;
pub use set_cover::{set_cover_exact, CoverSolution};

/// Size limits for the exact solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCaps {
    pub mis: usize,
    pub ids: usize,
    pub induced: usize,
    pub induced_path: usize,
    pub held_karp: usize,
    pub grundy: usize,
    pub set_cover: usize,
    /// Upper bound on `s^numVars` for CSP enumeration.
    pub csp_assignments: u64,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            mis: 24,
            ids: 40,
            induced: 20,
            induced_path: 24,
            held_karp: 20,
            grundy: 18,
            set_cover: 20,
            csp_assignments: 1 << 20,
        }
    }
}

/// Hard ceiling of the 64-bit mask representation used by the graph solvers.
pub(crate) const MASK_LIMIT: usize = 64;

pub(crate) fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap.min(MASK_LIMIT) {
        return Err(Error::CapExceeded {
            what,
            size,
            cap: cap.min(MASK_LIMIT),
        });
    }
    Ok(())
}

/// Optimal vertex set together with the number of search nodes visited.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactSolution {
    pub value: usize,
    pub set: VertexSet,
    pub nodes: u64,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// `(size, mask)` beats `(best_size, best_mask)` under the given direction,
/// ties going to the numerically smaller mask.
pub(crate) fn improves(size: u32, mask: u64, best: (u32, u64), maximize: bool) -> bool {
    if size == best.0 {
        mask < best.1
    } else if maximize {
        size > best.0
    } else {
        size < best.0
    }
}
