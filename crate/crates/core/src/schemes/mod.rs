//! Ratio-parameterized approximation schemes. Every scheme returns a
//! [`SolutionReport`] carrying the solution, its objective value and the
//! worst-case ratio the scheme certifies for it.

mod assignment;
mod atsp;
mod generic;
mod grundy;
mod mmvc;
mod partition;
mod set_cover;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use assignment::min_cost_assignment;
pub use atsp::{atsp_guarantee, atsp_scheme, min_weight_cycle_cover, CycleCover};
pub use generic::{generic_max_scheme, generic_min_scheme};
pub use grundy::{grundy_certified_colors, grundy_guarantee, grundy_scheme, GrundyOutcome};
pub use mmvc::{extend_to_minimal_vc, mmvc_scheme};
pub use partition::partition_scheme_mis;
pub use set_cover::{
    greedy_set_cover, mdelta_branch, setcover_mdelta, setcover_merge_approx, SetCoverBranch,
    SetCoverOutcome,
};

/// The ratio a scheme actually ran with.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioUsed {
    pub requested: f64,
    pub used: f64,
    pub clamped: bool,
}

impl RatioUsed {
    /// Accepts finite `r >= 1` and clamps it to at most `max(n, 1)`.
    pub fn clamp(r: f64, n: usize) -> Result<Self> {
        if !r.is_finite() || r < 1.0 {
            return Err(Error::InvalidRatio(r));
        }
        let ceiling = n.max(1) as f64;
        let used = r.min(ceiling);
        Ok(RatioUsed {
            requested: r,
            used,
            clamped: used != r,
        })
    }

    /// `⌊n / r⌋` for the clamped ratio, tolerant of rounding when `r` was
    /// itself computed as `n / k`.
    pub fn budget(&self, n: usize) -> usize {
        ((n as f64) / self.used + 1e-9).floor() as usize
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport<S> {
    pub value: u64,
    pub solution: S,
    /// Certified worst-case ratio between `value` and the optimum (≥ 1).
    pub guarantee: f64,
    pub nodes_enumerated: u64,
    pub wall_time_ms: f64,
    pub ratio: RatioUsed,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl<S> SolutionReport<S> {
    pub fn map<T>(self, f: impl FnOnce(S) -> T) -> SolutionReport<T> {
        SolutionReport {
            value: self.value,
            solution: f(self.solution),
            guarantee: self.guarantee,
            nodes_enumerated: self.nodes_enumerated,
            wall_time_ms: self.wall_time_ms,
            ratio: self.ratio,
            notes: self.notes,
        }
    }
}

/// Wall-clock timer; reads zero where no clock is available (wasm32).
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed_ms(&self) -> f64 {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed().as_secs_f64() * 1e3
        }
        #[cfg(target_arch = "wasm32")]
        {
            0.0
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_clamping() {
        let r = RatioUsed::clamp(10.0, 4).unwrap();
        assert_eq!(r.used, 4.0);
        assert!(r.clamped);
        assert_eq!(r.budget(4), 1);
        let r = RatioUsed::clamp(1.5, 12).unwrap();
        assert!(!r.clamped);
        assert_eq!(r.budget(12), 8);
        assert!(RatioUsed::clamp(0.5, 4).is_err());
        assert!(RatioUsed::clamp(f64::NAN, 4).is_err());
        assert_eq!(RatioUsed::clamp(3.0, 0).unwrap().used, 1.0);
    }
}
