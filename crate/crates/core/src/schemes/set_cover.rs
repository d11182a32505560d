use serde::{Deserialize, Serialize};

use super::{RatioUsed, SolutionReport, Stopwatch};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::exact::{set_cover_exact, CoverSolution};
use crate::set_system::SetSystem;

/// Greedy set cover: repeatedly take the set covering the most uncovered
/// elements, lowest index first on ties.
pub fn greedy_set_cover(sys: &SetSystem) -> Result<CoverSolution> {
    sys.check_coverable()?;
    let mut uncovered = BitSet::full(sys.universe_size());
    let mut chosen = Vec::new();
    let mut nodes = 0;
    while !uncovered.is_empty() {
        let (best, gain) = sys
            .sets()
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_len(&uncovered)))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        debug_assert!(gain > 0);
        nodes += sys.num_sets() as u64;
        chosen.push(best);
        uncovered.difference_with(&sys.sets()[best]);
    }
    chosen.sort_unstable();
    Ok(CoverSolution {
        indices: chosen,
        nodes,
    })
}

/// Group-merge approximation: blocks of `q = max(1, ⌊r⌋)` consecutive sets
/// are merged into their union, the merged instance is solved exactly, and
/// the chosen blocks are expanded back. Redundant sets are then dropped in
/// decreasing index order. The result has at most `q · opt` sets.
pub fn setcover_merge_approx(sys: &SetSystem, r: f64, exact_cap: usize) -> Result<CoverSolution> {
    if !r.is_finite() || r < 1.0 {
        return Err(Error::InvalidRatio(r));
    }
    sys.check_coverable()?;
    let m = sys.num_sets();
    let q = (r.floor() as usize).clamp(1, m.max(1));
    let blocks: Vec<Vec<usize>> = (0..m)
        .collect::<Vec<_>>()
        .chunks(q)
        .map(|c| c.to_vec())
        .collect();
    let merged = SetSystem::new(
        sys.universe_size(),
        blocks.iter().map(|b| sys.union_of(b)).collect(),
    )?;
    let merged_sol = set_cover_exact(&merged, exact_cap)?;
    let mut chosen: Vec<usize> = merged_sol
        .indices
        .iter()
        .flat_map(|&b| blocks[b].iter().copied())
        .collect();
    for i in (0..chosen.len()).rev() {
        let rest: Vec<usize> = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &s)| s)
            .collect();
        if sys.is_cover(&rest) {
            chosen.remove(i);
        }
    }
    Ok(CoverSolution {
        indices: chosen,
        nodes: merged_sol.nodes,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SetCoverBranch {
    Greedy,
    Merge,
}

/// Branch selection of [`setcover_mdelta`]: greedy when `m^δ > ln n`.
pub fn mdelta_branch(m: usize, n: usize, delta: f64) -> SetCoverBranch {
    let target = (m as f64).powf(delta);
    if target > (n as f64).ln() {
        SetCoverBranch::Greedy
    } else {
        SetCoverBranch::Merge
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverOutcome {
    pub indices: Vec<usize>,
    /// Branch chosen by the `m^δ` versus `ln n` test.
    pub branch: SetCoverBranch,
    /// Branch whose cover was returned.
    pub produced_by: SetCoverBranch,
}

/// `m^δ`-approximate set cover.
///
/// If `m^δ > ln n` greedy is already within the target; otherwise the
/// merge approximation runs with `r = m^δ`. Whichever branch was not selected
/// also runs when it fits the exact cap, and the smaller cover is returned.
pub fn setcover_mdelta(
    sys: &SetSystem,
    delta: f64,
    exact_cap: usize,
) -> Result<SolutionReport<SetCoverOutcome>> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "delta {delta} outside (0, 1]"
        )));
    }
    let watch = Stopwatch::start();
    sys.check_coverable()?;
    let m = sys.num_sets();
    let target = (m.max(1) as f64).powf(delta);
    let branch = mdelta_branch(m, sys.universe_size(), delta);
    let q = (target.floor() as usize).max(1);
    let merge_fits = m.div_ceil(q) <= exact_cap;

    let greedy = greedy_set_cover(sys)?;
    let mut nodes = greedy.nodes;
    let mut notes = Vec::new();
    let merge = match branch {
        SetCoverBranch::Merge => Some(setcover_merge_approx(sys, target, exact_cap)?),
        SetCoverBranch::Greedy if merge_fits => {
            Some(setcover_merge_approx(sys, target, exact_cap)?)
        }
        SetCoverBranch::Greedy => {
            notes.push("merge branch skipped: above exact cap".to_string());
            None
        }
    };
    if let Some(mg) = &merge {
        nodes += mg.nodes;
    }
    let (indices, produced_by) = match (branch, merge) {
        (SetCoverBranch::Greedy, Some(mg)) if mg.size() < greedy.size() => {
            (mg.indices, SetCoverBranch::Merge)
        }
        (SetCoverBranch::Greedy, _) => (greedy.indices, SetCoverBranch::Greedy),
        (SetCoverBranch::Merge, Some(mg)) if mg.size() <= greedy.size() => {
            (mg.indices, SetCoverBranch::Merge)
        }
        (SetCoverBranch::Merge, _) => (greedy.indices, SetCoverBranch::Greedy),
    };
    Ok(SolutionReport {
        value: indices.len() as u64,
        solution: SetCoverOutcome {
            indices,
            branch,
            produced_by,
        },
        guarantee: target,
        nodes_enumerated: nodes,
        wall_time_ms: watch.elapsed_ms(),
        ratio: RatioUsed {
            requested: target,
            used: target,
            clamped: false,
        },
        notes,
    })
}
